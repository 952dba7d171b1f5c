#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vnx/embedding.hpp"
#include "vnx/graph.hpp"

namespace vnx {

// One experiment batch: every host spec is attacked with every dictionary
// spec. Host specs are generator specs or edge-list files; for generator
// specs, every seed in `seeds` is substituted in turn.
struct BenchConfig {
    std::vector<std::string> hosts;
    std::vector<std::string> dicts;
    std::vector<long long> seeds{0};
    Rat epsilon = Rat(1, 100);
    long long budget = 10'000'000;
};

// Flat key=value config file: keys host, dict (repeatable), seeds
// (comma-separated), epsilon, budget. '#' comments allowed.
BenchConfig parse_bench_config(std::istream& in);
BenchConfig parse_bench_config_file(const std::string& path);

inline const char* bench_csv_header() {
    return "host,n,m,dict,requests_total,req_motif,req_rep,req_expand,req_term,recovered,"
           "coverage,ms";
}

// Runs the batch and returns CSV rows (header included). A row whose attack
// exhausts the search budget is emitted with recovered=error and the run
// continues. Timings land in the ms column; everything else is deterministic.
std::string run_bench(const BenchConfig& cfg);

} // namespace vnx
