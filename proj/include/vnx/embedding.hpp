#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vnx/graph.hpp"

namespace vnx {

// Witness that a guest graph fits into a host graph: a node map plus, for
// every guest edge, a simple host path between the images of its endpoints
// (stored as the full host node sequence, including both endpoints). An empty
// path is allowed exactly when the endpoints share their image; such an edge
// consumes no resources. Interior path nodes each pay the relay cost epsilon
// against their node capacity.
struct Embedding {
    std::vector<int> node_map;                 // guest node -> host node
    std::vector<std::vector<int>> edge_paths;  // guest edge idx -> host node seq
};

struct ValidationReport {
    bool ok = true;
    // 1 = node map, 2 = edge paths, 3 = node capacity, 4 = edge capacity.
    int condition = 0;
    std::string detail;
};

// Checks a witness against the guest/host pair. Throws std::invalid_argument
// if the witness is malformed (wrong vector sizes, ids out of range); returns
// the first violated condition otherwise.
ValidationReport validate_embedding(const Embedding& e, const CapGraph& guest,
                                    const CapGraph& host, const Rat& epsilon);

struct SolveOptions {
    Rat epsilon = Rat(1, 100);
    long long budget = 10'000'000; // backtracking step budget per query
};

// Thrown when the search budget is exhausted before an answer is known.
// Deliberately distinct from a "no" answer.
struct BudgetError : std::runtime_error {
    BudgetError() : std::runtime_error("embedding search budget exhausted") {}
};

bool is_embeddable(const CapGraph& guest, const CapGraph& host, const SolveOptions& opts = {});
std::optional<Embedding> find_embedding(const CapGraph& guest, const CapGraph& host,
                                        const SolveOptions& opts = {});

enum class Phase { motif_search, repetition, edge_expansion, termination };

const char* phase_name(Phase p);

struct LogEntry {
    int idx = 0;
    Phase phase = Phase::motif_search;
    int guest_nodes = 0;
    int guest_edges = 0;
    bool reply = false;
};

// Interface the attacker talks to: yes/no embedding queries only.
class QueryOracle {
public:
    virtual ~QueryOracle() = default;
    virtual bool query(const CapGraph& guest, Phase phase) = 0;
};

// Honest oracle over a hidden host. The attacker must only ever call query();
// host_for_harness() exists for scoring/validation code outside the attack.
class Oracle : public QueryOracle {
public:
    Oracle(CapGraph host, SolveOptions opts = {});
    bool query(const CapGraph& guest, Phase phase) override;
    const std::vector<LogEntry>& log() const { return log_; }
    int query_count() const { return (int)log_.size(); }
    const CapGraph& host_for_harness() const { return host_; }
    const SolveOptions& options() const { return opts_; }

private:
    CapGraph host_;
    SolveOptions opts_;
    std::vector<LogEntry> log_;
};

// Replays a fixed list of answers; used to check the attacker is oracle-blind.
class ReplayOracle : public QueryOracle {
public:
    explicit ReplayOracle(std::vector<bool> replies) : replies_(std::move(replies)) {}
    bool query(const CapGraph&, Phase) override {
        if (pos_ >= replies_.size()) throw std::runtime_error("replay oracle exhausted");
        return replies_[pos_++];
    }
    size_t consumed() const { return pos_; }

private:
    std::vector<bool> replies_;
    size_t pos_ = 0;
};

} // namespace vnx
