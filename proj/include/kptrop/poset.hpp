#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kptrop/seq.hpp"

namespace kptrop {

enum class PosetKind { Simplex, Hypercube, Permutohedron, Tamari, Custom };

/// Finite labelled DAG with one source and one sink. For the permutohedron
/// and Tamari posets the edges are cover relations.
struct Poset {
  PosetKind kind = PosetKind::Custom;
  std::vector<std::string> node_labels;
  struct Edge {
    int from = 0, to = 0;
    std::string label;
  };
  std::vector<Edge> edges;
  int source = -1, sink = -1;

  int node_count() const { return static_cast<int>(node_labels.size()); }
  std::vector<std::vector<int>> adjacency() const;  // edge ids per source node
};

struct ResourceGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Poset on S_r under single sigma^H steps. Guarded (default bound 7).
Poset permutohedron(int r, int bound = 7);

/// Tamari lattice on Y_r; covers are right rotations (a-steps, b-normalized).
Poset tamari(int r, int bound = 9);

/// Simplex family: complete digraph on the M+1 phases, edge i->j labelled
/// x_ij. Hypercube family: nodes are the index subsequences 1..M+1, edges
/// delete one interior index and carry the y-label of the merge.
Poset family_poset(PosetKind kind, int M);

/// Every source->sink path as its list of edge labels (path order),
/// lexicographically sorted.
std::vector<std::vector<std::string>> maximal_chains(const Poset& poset);

/// Same enumeration as edge-id paths (deterministic order).
std::vector<std::vector<int>> maximal_chain_edges(const Poset& poset);

/// Operator word of a chain in an op-labelled poset (labels are read as
/// display fragments; the word is their reverse concatenation).
std::string chain_word(const std::vector<std::string>& chain_labels);

/// Partition the poset's maximal chains into commutation classes: two
/// chains are equivalent when they differ by swapping two consecutive
/// covers whose square closes in the Hasse diagram (on operator words this
/// is far commutation of a-letters). Returns classes as sorted lists of
/// display words.
std::vector<std::vector<std::string>> chain_classes(const Poset& poset);

/// Word-level far commutation only (adjacent a-letters with |s-s'| > 1).
std::vector<std::vector<std::string>> far_commutation_classes(
    const std::vector<std::string>& words);

/// Apply both words from `start`; true iff both are defined and agree.
bool braid_check(const OpWord& word1, const OpWord& word2, const LevelSeq& start);

}  // namespace kptrop
