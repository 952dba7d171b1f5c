#include "vnx/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vnx/attack.hpp"
#include "vnx/dictionary.hpp"
#include "vnx/isomorphism.hpp"

namespace vnx {

BenchConfig parse_bench_config(std::istream& in) {
    BenchConfig cfg;
    cfg.seeds.clear();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = line.find_first_not_of(" \t\r");
        if (notspace == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = line.substr(notspace, eq - notspace);
        std::string val = line.substr(eq + 1);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        while (!val.empty() && (val.front() == ' ' || val.front() == '\t')) val.erase(0, 1);
        while (!val.empty() && (val.back() == ' ' || val.back() == '\t' || val.back() == '\r'))
            val.pop_back();
        if (key == "host")
            cfg.hosts.push_back(val);
        else if (key == "dict")
            cfg.dicts.push_back(val);
        else if (key == "seeds") {
            std::istringstream vs(val);
            std::string tok;
            while (std::getline(vs, tok, ',')) cfg.seeds.push_back(std::stoll(tok));
        } else if (key == "epsilon")
            cfg.epsilon = parse_rat(val);
        else if (key == "budget")
            cfg.budget = std::stoll(val);
        else
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    if (cfg.seeds.empty()) cfg.seeds.push_back(0);
    return cfg;
}

BenchConfig parse_bench_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_bench_config(in);
}

std::string run_bench(const BenchConfig& cfg) {
    std::ostringstream out;
    out << bench_csv_header() << "\n";
    SolveOptions sopts;
    sopts.epsilon = cfg.epsilon;
    sopts.budget = cfg.budget;

    // expand host specs: generator specs without an explicit seed get one row
    // per configured seed
    std::vector<std::string> hosts;
    for (const auto& h : cfg.hosts) {
        bool generated = h.find(':') != std::string::npos;
        bool has_seed = h.find("seed=") != std::string::npos;
        if (generated && !has_seed)
            for (long long s : cfg.seeds) hosts.push_back(h + ":seed=" + std::to_string(s));
        else
            hosts.push_back(h);
    }

    for (const auto& hspec : hosts) {
        CapGraph host = host_from_spec(hspec);
        for (const auto& dspec : cfg.dicts) {
            Dictionary dict = dictionary_from_spec(dspec);
            Oracle oracle(host, sopts);
            auto t0 = std::chrono::steady_clock::now();
            std::string recovered;
            double coverage = 0.0;
            AttackResult res;
            try {
                res = run_dict(oracle, dict);
                recovered = is_isomorphic(res.h_prime, host) ? "yes" : "no";
                coverage = coverage_report(res, host);
            } catch (const BudgetError&) {
                recovered = "error";
                res.log = oracle.log();
            }
            auto t1 = std::chrono::steady_clock::now();
            long long ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            char cov[32];
            snprintf(cov, sizeof cov, "%.4f", coverage);
            out << hspec << "," << host.n << "," << host.m() << "," << dspec << ","
                << oracle.query_count() << "," << res.requests(Phase::motif_search) << ","
                << res.requests(Phase::repetition) << "," << res.requests(Phase::edge_expansion)
                << "," << res.requests(Phase::termination) << "," << recovered << "," << cov
                << "," << ms << "\n";
        }
    }
    return out.str();
}

} // namespace vnx
