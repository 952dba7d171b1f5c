// vnx: virtual-network topology extraction toolbox.
//
// Subcommands:
//   oracle   answer a single embedding query (guest vs host edge lists)
//   analyze  motif / dissection statistics for a host
//   dict     build, check or describe dictionaries
//   attack   run the dictionary attack against an oracle over a hidden host
//   bench    run an experiment batch and emit CSV

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vnx/attack.hpp"
#include "vnx/bench.hpp"
#include "vnx/dictionary.hpp"
#include "vnx/dot.hpp"
#include "vnx/embedding.hpp"
#include "vnx/graph.hpp"
#include "vnx/isomorphism.hpp"
#include "vnx/motif.hpp"

using namespace vnx;

namespace {

long long budget_from_env(long long fallback) {
    if (const char* s = std::getenv("VNX_BUDGET")) return std::atoll(s);
    return fallback;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int cmd_oracle(const std::string& guest_path, const std::string& host_path,
               const std::string& eps_str, long long budget, bool witness) {
    SolveOptions opts;
    opts.epsilon = parse_rat(eps_str);
    opts.budget = budget_from_env(budget);
    CapGraph guest = parse_edge_list_file(guest_path);
    CapGraph host = parse_edge_list_file(host_path);
    auto emb = find_embedding(guest, host, opts);
    if (!emb) {
        std::cout << "no\n";
        return 1;
    }
    std::cout << "yes\n";
    if (witness) {
        for (int u = 0; u < guest.n; ++u) std::cout << "map " << u << " -> " << emb->node_map[u] << "\n";
        for (int e = 0; e < guest.m(); ++e) {
            std::cout << "path " << guest.edges[e].first << "-" << guest.edges[e].second << ":";
            for (int v : emb->edge_paths[e]) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_analyze(const std::string& host_spec, const std::string& motif_dir,
                const std::string& dot_path) {
    CapGraph host = host_from_spec(host_spec);
    DissectStats st = dissect(host);
    std::cout << "host,n,tree_fringe,degree2,largest_motif,other\n";
    std::cout << host_spec << "," << st.n << "," << st.tree_fringe << "," << st.contracted << ","
              << st.largest_motif << "," << st.other << "\n";
    MotifSet ms = extract_motifs(host);
    std::cerr << "motifs: " << ms.motifs.size() << "\n";
    if (!motif_dir.empty()) {
        for (size_t i = 0; i < ms.motifs.size(); ++i)
            write_file(motif_dir + "/" + ms.motifs[i].name + ".edges",
                       write_edge_list(ms.motifs[i].graph));
    }
    if (!dot_path.empty()) write_file(dot_path, emit_dot(host, true));
    return 0;
}

int cmd_dict_build(const std::vector<std::string>& motif_files, const std::string& preset,
                   int max_nodes, const std::string& out_path) {
    Dictionary d;
    if (!preset.empty()) {
        d = dictionary_from_spec(preset);
    } else {
        MotifSet ms;
        for (const auto& f : motif_files) {
            Motif m;
            m.graph = parse_edge_list_file(f);
            m.is_chain = m.graph.n == 2 && m.graph.m() == 1;
            m.name = m.is_chain ? "C" : "M" + std::to_string(ms.motifs.size());
            ms.motifs.push_back(std::move(m));
        }
        d = build_dictionary(ms, max_nodes);
    }
    std::string text = write_dictionary(d);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    std::cerr << "words: " << d.words.size() << ", edges: " << d.edges.size() << "\n";
    return 0;
}

int cmd_dict_check(const std::string& spec, int node_bound) {
    Dictionary d = dictionary_from_spec(spec);
    // re-verify the stored edges against the embeddability relation
    for (size_t i = 0; i < d.words.size(); ++i)
        for (int c : d.children[i])
            if (!dict_edge_test(d.words[i], d.words[c])) {
                std::cout << "bad-edge " << d.words[i].label << " -> " << d.words[c].label << "\n";
                return 1;
            }
    auto bad = check_robustness(d, node_bound);
    if (bad) {
        std::cout << "not-robust " << d.words[bad->word_id].label << " embeds into";
        for (int w : bad->sequence) std::cout << " " << d.words[w].label;
        std::cout << "\n";
        return 1;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_dict_stats(const std::string& spec) {
    Dictionary d = dictionary_from_spec(spec);
    std::cout << "rank,label,nodes,cost,cost_per_node\n";
    for (size_t i = 0; i < d.words.size(); ++i) {
        long long c = dict_cost(d, (int)i);
        std::cout << i << "," << d.words[i].label << "," << d.words[i].num_nodes() << "," << c
                  << "," << format_rat(Rat(c, d.words[i].num_nodes())) << "\n";
    }
    std::cout << "delta," << format_rat(dict_delta(d)) << "\n";
    return 0;
}

int cmd_attack(const std::string& host_spec, const std::string& dict_spec,
               const std::string& eps_str, long long budget, const std::string& out_prefix,
               bool estimate) {
    SolveOptions opts;
    opts.epsilon = parse_rat(eps_str);
    opts.budget = budget_from_env(budget);
    CapGraph host = host_from_spec(host_spec);
    Dictionary dict = dictionary_from_spec(dict_spec);
    Oracle oracle(host, opts);
    if (estimate) {
        auto est = estimate_n(oracle);
        std::cerr << "estimated n=" << est.n << " in " << est.requests << " requests\n";
    }
    AttackResult res = run_dict(oracle, dict);
    bool recovered = is_isomorphic(res.h_prime, host);
    std::cerr << "requests=" << res.requests_total() << " nodes=" << res.h_prime.n
              << " recovered=" << (recovered ? "yes" : "no") << "\n";
    if (!out_prefix.empty()) {
        write_file(out_prefix + ".edges", write_edge_list(res.h_prime));
        write_file(out_prefix + ".dot", emit_dot(res.h_prime, true));
        std::string csv = "idx,phase,guest_nodes,guest_edges,reply\n";
        for (const auto& e : res.log)
            csv += std::to_string(e.idx) + "," + phase_name(e.phase) + "," +
                   std::to_string(e.guest_nodes) + "," + std::to_string(e.guest_edges) + "," +
                   (e.reply ? "yes" : "no") + "\n";
        write_file(out_prefix + ".requests.csv", csv);
    }
    return recovered ? 0 : 2;
}

int cmd_bench(const std::string& config_path, std::vector<std::string> hosts,
              std::vector<std::string> dicts, const std::string& eps_str, long long budget,
              const std::string& out_path) {
    BenchConfig cfg;
    if (!config_path.empty()) cfg = parse_bench_config_file(config_path);
    // flags override the config file
    if (!hosts.empty()) cfg.hosts = std::move(hosts);
    if (!dicts.empty()) cfg.dicts = std::move(dicts);
    if (!eps_str.empty()) cfg.epsilon = parse_rat(eps_str);
    if (budget > 0) cfg.budget = budget;
    cfg.budget = budget_from_env(cfg.budget);
    if (cfg.hosts.empty() || cfg.dicts.empty())
        throw std::runtime_error("bench needs at least one host and one dict");
    std::string csv = run_bench(cfg);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"virtual-network topology extraction toolbox"};
    app.require_subcommand(1);

    // oracle
    std::string guest_path, host_spec, eps_str = "1/100", out_prefix, dict_spec;
    long long budget = 10'000'000;
    bool witness = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "answer one embedding query");
    oracle_cmd->add_option("--guest", guest_path, "guest edge list")->required();
    oracle_cmd->add_option("--host", host_spec, "host edge list")->required();
    oracle_cmd->add_option("--epsilon", eps_str, "relay cost (rational)");
    oracle_cmd->add_option("--budget", budget, "search budget");
    oracle_cmd->add_flag("--witness", witness, "print the embedding witness");

    // analyze
    std::string motif_dir, dot_path;
    auto* analyze_cmd = app.add_subcommand("analyze", "motif and dissection statistics");
    analyze_cmd->add_option("--host", host_spec, "host edge list or generator spec")->required();
    analyze_cmd->add_option("--emit-motifs", motif_dir, "write motif edge lists into DIR");
    analyze_cmd->add_option("--dot", dot_path, "write a colored DOT rendering");

    // dict
    auto* dict_cmd = app.add_subcommand("dict", "dictionary operations");
    dict_cmd->require_subcommand(1);
    std::vector<std::string> motif_files;
    std::string preset, dict_out;
    int max_nodes = 10, node_bound = 10;
    auto* build_cmd = dict_cmd->add_subcommand("build", "build a dictionary");
    build_cmd->add_option("--motif", motif_files, "motif edge-list file (repeatable)");
    build_cmd->add_option("--preset", preset, "trees|cactus|cliques:<K>|mixed");
    build_cmd->add_option("--max-nodes", max_nodes, "word size bound for composition");
    build_cmd->add_option("-o,--out", dict_out, "output file (default stdout)");
    auto* check_cmd = dict_cmd->add_subcommand("check", "verify edges and robustness");
    check_cmd->add_option("dict", dict_spec, "dictionary file or preset")->required();
    check_cmd->add_option("--bound", node_bound, "sequence node bound for robustness");
    auto* stats_cmd = dict_cmd->add_subcommand("stats", "rank/cost table and delta");
    stats_cmd->add_option("dict", dict_spec, "dictionary file or preset")->required();

    // attack
    bool estimate = false;
    auto* attack_cmd = app.add_subcommand("attack", "run the dictionary attack");
    attack_cmd->add_option("--host", host_spec, "host edge list or generator spec")->required();
    attack_cmd->add_option("--dict", dict_spec, "dictionary file or preset")->required();
    attack_cmd->add_option("--epsilon", eps_str, "relay cost (rational)");
    attack_cmd->add_option("--budget", budget, "search budget per query");
    attack_cmd->add_option("-o,--out", out_prefix, "output prefix (.edges/.dot/.requests.csv)");
    attack_cmd->add_flag("--estimate-n", estimate, "estimate the host size first");

    // bench
    std::string config_path, bench_out, bench_eps;
    std::vector<std::string> bench_hosts, bench_dicts;
    long long bench_budget = 0;
    auto* bench_cmd = app.add_subcommand("bench", "run an experiment batch");
    bench_cmd->add_option("--config", config_path, "key=value config file");
    bench_cmd->add_option("--host", bench_hosts, "host spec (repeatable, overrides config)");
    bench_cmd->add_option("--dict", bench_dicts, "dictionary spec (repeatable, overrides config)");
    bench_cmd->add_option("--epsilon", bench_eps, "relay cost (rational)");
    bench_cmd->add_option("--budget", bench_budget, "search budget per query");
    bench_cmd->add_option("-o,--out", bench_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*oracle_cmd) return cmd_oracle(guest_path, host_spec, eps_str, budget, witness);
        if (*analyze_cmd) return cmd_analyze(host_spec, motif_dir, dot_path);
        if (*dict_cmd) {
            if (*build_cmd) return cmd_dict_build(motif_files, preset, max_nodes, dict_out);
            if (*check_cmd) return cmd_dict_check(dict_spec, node_bound);
            if (*stats_cmd) return cmd_dict_stats(dict_spec);
        }
        if (*attack_cmd)
            return cmd_attack(host_spec, dict_spec, eps_str, budget, out_prefix, estimate);
        if (*bench_cmd)
            return cmd_bench(config_path, bench_hosts, bench_dicts, bench_eps, bench_budget,
                             bench_out);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
