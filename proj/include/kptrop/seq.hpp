#pragma once

#include <array>
#include <string>
#include <vector>

namespace kptrop {

/// Element of S_r: levels top to bottom, entry n_i = which edge (left to
/// right) the level-i node sits on; 1 <= n_i <= i.
using LevelSeq = std::vector<int>;

bool is_level_seq(const LevelSeq& seq);
/// Additionally nondecreasing: the Tamari (Y_r) representative.
bool is_tamari_seq(const LevelSeq& seq);

std::string seq_str(const LevelSeq& seq);
LevelSeq parse_seq(const std::string& text);  // digits or comma-separated

/// Rooted proper binary tree, nodes numbered 1..r in level order of some
/// leveling. Children > 0 are node ids, children < 0 encode leaf number -c
/// (leaves numbered 1..r+1 left to right).
struct BinaryTree {
  struct Node {
    int left = 0, right = 0;
  };
  std::vector<Node> nodes;  // [0] unused, ids are 1-based
  int root = 0;

  int size() const { return static_cast<int>(nodes.size()) - 1; }
  bool same_shape(const BinaryTree& other) const;
};

/// Decode a level sequence into the tree it levels.
BinaryTree decode_tree(const LevelSeq& seq);

/// The Y_r code of a tree: level its nodes leftmost-available-first, which
/// yields the unique nondecreasing sequence.
LevelSeq tamari_code(const BinaryTree& tree);

/// Forget levels: the unique Y_r representative of seq's underlying tree.
LevelSeq collapse(const LevelSeq& seq);

/// sigma applied to the s-th pair counted from right to left (s in 1..r-1).
LevelSeq sigma_s(const LevelSeq& seq, int s);

struct OpLetter {
  char kind = 'a';  // 'a' or 'b'
  int site = 0;     // s, pairs counted from the right

  bool operator==(const OpLetter&) const = default;
  auto operator<=>(const OpLetter&) const = default;
};

/// Letters in application order (index 0 acts first).
using OpWord = std::vector<OpLetter>;

/// Rendered in the usual operator order: last-applied letter first.
std::string op_word_str(const OpWord& word);
OpWord parse_op_word(const std::string& text);  // inverse of op_word_str

/// a(n,n) = (n,n+1); b(m,n) = (n,m+1) for m > n. Throws on domain violation.
LevelSeq apply_op(const LevelSeq& seq, OpLetter op);
LevelSeq apply_word(LevelSeq seq, const OpWord& word);

/// Right rotation steps available from a Y_r element: one per adjacent equal
/// pair. `letters` holds the a followed by the normalizing b's.
struct TamariCover {
  LevelSeq to;
  OpWord letters;
};

std::vector<TamariCover> tamari_covers(const LevelSeq& y);

/// sigma^H steps from an S_r element: one per pair with n_i >= n_{i+1}.
struct PermCover {
  LevelSeq to;
  OpLetter letter;
};

std::vector<PermCover> perm_covers(const LevelSeq& seq);

/// Phase triples (i<j<k) of the tree's nodes given that the r+1 leaves
/// separate regions labelled 1..r+2 left to right. Ordered by the node ids.
std::vector<std::array<int, 3>> node_triples(const BinaryTree& tree);

/// Nodes in Y-canonical order (leftmost-available-first), as node ids.
std::vector<int> canonical_node_order(const BinaryTree& tree);

}  // namespace kptrop
