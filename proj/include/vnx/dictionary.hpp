#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnx/embedding.hpp"
#include "vnx/graph.hpp"
#include "vnx/motif.hpp"

namespace vnx {

// A word: a connected graph with an ordered pair of attachment nodes.
// Attachments chosen on an edge are realized by subdividing that edge first,
// so stored words always attach at nodes. Words are glued into sequences by
// identifying one word's out node with the next word's in node; the chain
// word glued on both sides contributes just an edge.
struct Word {
    std::string label;
    CapGraph graph; // unit capacities
    int in_node = 0;
    int out_node = 1;
    int num_nodes() const { return graph.n; }
};

struct Dictionary {
    std::vector<Word> words;
    int root = 0;                            // always the chain word
    std::vector<std::pair<int, int>> edges;  // DAG edges (from, to)
    std::vector<std::vector<int>> children;  // per word, in port order
    std::vector<int> rank;                   // per word, 0-based; rank[root] == 0
    std::vector<int> by_rank;                // rank -> word id

    const Word& word(int id) const { return words[id]; }
    int find_label(const std::string& label) const; // -1 if absent
};

Word make_chain_word();

// Realizes a sequence of words glued in order. The first word's in node gets
// id 0; every later node is appended in deterministic order. Returns the
// realized graph together with the surviving in/out attachment ids.
struct RealizedSeq {
    CapGraph graph;
    int in_node = 0;
    int out_node = 0;
};
RealizedSeq realize_sequence(const Dictionary& d, const std::vector<int>& word_ids);
RealizedSeq realize_words(const std::vector<Word>& words); // same, explicit words

// The chain context of a word: C . w . C, i.e. a pendant chain glued to each
// attachment node.
CapGraph chain_context(const Word& w);

// Whether w1's chain context embeds into w2's chain context. This is the edge
// relation underlying the dictionary DAG (before strictness and reduction).
bool dict_edge_test(const Word& w1, const Word& w2, const SolveOptions& opts = {});

// Node colors marking the attachment points (in=1, out=2, rest 0); for
// comparing words up to marked isomorphism.
std::vector<int> word_colors(const Word& w);
bool words_equivalent(const Word& a, const Word& b);

// Builds the DAG, rank and ports over a fixed word list (words are
// de-duplicated up to marked isomorphism first; the chain word must be
// present). Edges: strict context-embeddability, transitively reduced.
// Port order: children by ascending rank. Rank: deterministic topological
// order (ties: fewer nodes first, then label).
Dictionary finalize_dictionary(std::vector<Word> words, const SolveOptions& opts = {});

// The bounded generic construction: every attachment pair (up to automorphism)
// of every motif, then all glued sequences of those single-motif words with at
// most max_word_nodes nodes. Throws std::length_error if more than word_cap
// words would be generated.
Dictionary build_dictionary(const MotifSet& motifs, int max_word_nodes,
                            const SolveOptions& opts = {}, size_t word_cap = 512);

// Enumerates the attachment point pairs of a motif up to automorphism
// (ordered pairs of distinct elements, nodes and edges both allowed) and
// returns one realized word per orbit. For the chain motif only the node pair
// is kept. Labels: "<name>", "<name>.2", ...
std::vector<Word> motif_words(const Motif& m);

// Curated dictionaries.
Dictionary make_tree_dictionary();                     // { C }
Dictionary make_cactus_dictionary();                   // { C, triangle }
Dictionary make_clique_dictionary(int max_clique);     // { C, Y, all K4..Kmax variants }
Dictionary make_mixed_dictionary();                   // { C, Y, diamond, K23, K5 }

// cost(w): maximal sum of out-degrees along a root-to-w path (both ends
// included). delta: max over words of cost(w)/num_nodes(w).
long long dict_cost(const Dictionary& d, int word_id);
Rat dict_delta(const Dictionary& d);

// Robustness: no word may embed (plainly, as a graph) into the realization of
// a sequence of words not reachable from it in the DAG, unless the
// realization is isomorphic to the word itself or some contiguous
// subsequence realizes a word that is reachable. Sequences are enumerated up
// to node_bound realized nodes; throws std::length_error past seq_cap
// candidate sequences.
struct RobustnessViolation {
    int word_id;
    std::vector<int> sequence;
};
std::optional<RobustnessViolation> check_robustness(const Dictionary& d, int node_bound,
                                                    const SolveOptions& opts = {},
                                                    size_t seq_cap = 200000);

// Presets "trees", "cactus", "cliques:<K>", "mixed", or a dictionary file path.
Dictionary dictionary_from_spec(const std::string& spec);

std::string write_dictionary(const Dictionary& d);
Dictionary parse_dictionary(std::istream& in);
Dictionary parse_dictionary_file(const std::string& path);

} // namespace vnx
