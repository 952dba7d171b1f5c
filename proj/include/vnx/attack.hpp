#pragma once

#include <string>
#include <vector>

#include "vnx/dictionary.hpp"
#include "vnx/embedding.hpp"
#include "vnx/graph.hpp"

namespace vnx {

// One committed discovery step: the frontier node it was anchored at and the
// word sequence found there (labels in gluing order).
struct SeqRecord {
    int at_node = 0;
    std::vector<std::string> labels;
};

struct AttackOptions {
    // After the frontier is exhausted, confirm with one query of the final
    // guess (expected yes) and one with an extra pendant chain (expected no).
    bool confirm_termination = true;
};

struct AttackResult {
    CapGraph h_prime;                  // final reconstruction
    std::vector<LogEntry> log;         // every request, in order
    std::vector<SeqRecord> sequence_tree;
    // Set when a termination confirmation query answered unexpectedly.
    bool termination_anomaly = false;
    int requests(Phase p) const;
    int requests_total() const { return (int)log.size(); }
};

// The dictionary attack: grows a reconstruction from a single node, repeatedly
// finding the maximal word sequence attachable at the lowest-id frontier node
// and expanding each committed edge into the longest chain the oracle accepts.
AttackResult run_dict(QueryOracle& oracle, const Dictionary& dict, const AttackOptions& opts = {});

// Binary search for the host node count using edgeless unit-demand guests:
// a k-node edgeless guest embeds iff k <= n. Needs an upper bound to start.
struct EstimateResult {
    int n = 0;
    int requests = 0;
};
EstimateResult estimate_n(QueryOracle& oracle, int upper_bound = 1 << 20);

// Fraction of host nodes recovered by run_dict, judged by the harness (which
// may read the oracle's host). 1 when node counts match.
double coverage_report(const AttackResult& r, const CapGraph& host);

} // namespace vnx
