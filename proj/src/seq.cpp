#include "kptrop/seq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kptrop {

bool is_level_seq(const LevelSeq& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 1 || seq[i] > static_cast<int>(i) + 1) return false;
  return true;
}

bool is_tamari_seq(const LevelSeq& seq) {
  if (!is_level_seq(seq)) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (seq[i] > seq[i + 1]) return false;
  return true;
}

std::string seq_str(const LevelSeq& seq) {
  std::string s;
  bool compact = std::all_of(seq.begin(), seq.end(), [](int n) { return n <= 9; });
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!compact && i) s += ',';
    s += std::to_string(seq[i]);
  }
  return s;
}

LevelSeq parse_seq(const std::string& text) {
  LevelSeq seq;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto comma = text.find(',', pos);
      seq.push_back(std::stoi(text.substr(pos, comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("parse_seq: bad character");
      seq.push_back(ch - '0');
    }
  }
  return seq;
}

bool BinaryTree::same_shape(const BinaryTree& other) const {
  if (size() != other.size()) return false;
  // Shapes agree iff the canonical codes agree.
  return tamari_code(*this) == tamari_code(other);
}

BinaryTree decode_tree(const LevelSeq& seq) {
  if (!is_level_seq(seq)) throw std::invalid_argument("decode_tree: not a level sequence");
  const int r = static_cast<int>(seq.size());
  BinaryTree tree;
  tree.nodes.resize(static_cast<std::size_t>(r) + 1);
  // Open slots left to right; each is (owner node id, side) or the root.
  struct Slot {
    int owner = 0;  // 0 = root slot
    bool right = false;
  };
  std::vector<Slot> slots{Slot{}};
  for (int i = 1; i <= r; ++i) {
    int pos = seq[static_cast<std::size_t>(i - 1)] - 1;
    Slot s = slots[static_cast<std::size_t>(pos)];
    if (s.owner == 0)
      tree.root = i;
    else if (s.right)
      tree.nodes[static_cast<std::size_t>(s.owner)].right = i;
    else
      tree.nodes[static_cast<std::size_t>(s.owner)].left = i;
    slots[static_cast<std::size_t>(pos)] = Slot{i, false};
    slots.insert(slots.begin() + pos + 1, Slot{i, true});
  }
  for (std::size_t j = 0; j < slots.size(); ++j) {
    const Slot& s = slots[j];
    int leaf = -static_cast<int>(j + 1);
    if (s.owner == 0)
      tree.root = leaf;  // r = 0 edge case
    else if (s.right)
      tree.nodes[static_cast<std::size_t>(s.owner)].right = leaf;
    else
      tree.nodes[static_cast<std::size_t>(s.owner)].left = leaf;
  }
  return tree;
}

std::vector<int> canonical_node_order(const BinaryTree& tree) {
  // Rebuild the slot process, always placing the leftmost placeable node.
  struct Slot {
    int node = 0;  // internal node id occupying this dangling edge, 0 = leaf
  };
  std::vector<Slot> slots{Slot{tree.root > 0 ? tree.root : 0}};
  std::vector<int> order;
  const int r = tree.size();
  for (int step = 0; step < r; ++step) {
    std::size_t pos = 0;
    while (pos < slots.size() && slots[pos].node == 0) ++pos;
    if (pos == slots.size()) throw std::logic_error("canonical_node_order: malformed tree");
    int id = slots[pos].node;
    order.push_back(id);
    const auto& nd = tree.nodes[static_cast<std::size_t>(id)];
    slots[pos] = Slot{nd.left > 0 ? nd.left : 0};
    slots.insert(slots.begin() + static_cast<long>(pos) + 1, Slot{nd.right > 0 ? nd.right : 0});
  }
  return order;
}

LevelSeq tamari_code(const BinaryTree& tree) {
  struct Slot {
    int node = 0;
  };
  std::vector<Slot> slots{Slot{tree.root > 0 ? tree.root : 0}};
  LevelSeq code;
  const int r = tree.size();
  for (int step = 0; step < r; ++step) {
    std::size_t pos = 0;
    while (pos < slots.size() && slots[pos].node == 0) ++pos;
    code.push_back(static_cast<int>(pos) + 1);
    int id = slots[pos].node;
    const auto& nd = tree.nodes[static_cast<std::size_t>(id)];
    slots[pos] = Slot{nd.left > 0 ? nd.left : 0};
    slots.insert(slots.begin() + static_cast<long>(pos) + 1, Slot{nd.right > 0 ? nd.right : 0});
  }
  return code;
}

LevelSeq collapse(const LevelSeq& seq) { return tamari_code(decode_tree(seq)); }

namespace {

// Pair s from the right lives at 0-based positions (r-s-1, r-s).
std::pair<int, int> pair_positions(const LevelSeq& seq, int s) {
  const int r = static_cast<int>(seq.size());
  if (s < 1 || s > r - 1) throw std::invalid_argument("pair site out of range");
  return {r - s - 1, r - s};
}

}  // namespace

LevelSeq sigma_s(const LevelSeq& seq, int s) {
  auto [i, j] = pair_positions(seq, s);
  LevelSeq out = seq;
  int m = seq[static_cast<std::size_t>(i)], n = seq[static_cast<std::size_t>(j)];
  if (m >= n) {
    out[static_cast<std::size_t>(i)] = n;
    out[static_cast<std::size_t>(j)] = m + 1;
  } else {
    out[static_cast<std::size_t>(i)] = n - 1;
    out[static_cast<std::size_t>(j)] = m;
  }
  return out;
}

std::string op_word_str(const OpWord& word) {
  std::string s;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    s += it->kind;
    s += std::to_string(it->site);
  }
  return s;
}

OpWord parse_op_word(const std::string& text) {
  OpWord display;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '.') {
      ++i;
      continue;
    }
    char kind = text[i];
    if (kind != 'a' && kind != 'b') throw std::invalid_argument("bad op letter in word");
    ++i;
    int site = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      site = site * 10 + (text[i++] - '0');
    if (site == 0) throw std::invalid_argument("op letter missing site");
    display.push_back({kind, site});
  }
  return OpWord(display.rbegin(), display.rend());
}

LevelSeq apply_op(const LevelSeq& seq, OpLetter op) {
  auto [i, j] = pair_positions(seq, op.site);
  int m = seq[static_cast<std::size_t>(i)], n = seq[static_cast<std::size_t>(j)];
  LevelSeq out = seq;
  if (op.kind == 'a') {
    if (m != n) throw std::invalid_argument("a: pair entries must be equal");
    out[static_cast<std::size_t>(j)] = n + 1;
  } else if (op.kind == 'b') {
    if (!(m > n)) throw std::invalid_argument("b: left entry must exceed right");
    out[static_cast<std::size_t>(i)] = n;
    out[static_cast<std::size_t>(j)] = m + 1;
  } else {
    throw std::invalid_argument("unknown op letter");
  }
  return out;
}

LevelSeq apply_word(LevelSeq seq, const OpWord& word) {
  for (const OpLetter& op : word) seq = apply_op(seq, op);
  return seq;
}

std::vector<TamariCover> tamari_covers(const LevelSeq& y) {
  if (!is_tamari_seq(y)) throw std::invalid_argument("tamari_covers: not a Y_r element");
  const int r = static_cast<int>(y.size());
  std::vector<TamariCover> covers;
  for (int i = 0; i + 1 < r; ++i) {
    if (y[static_cast<std::size_t>(i)] != y[static_cast<std::size_t>(i + 1)]) continue;
    TamariCover cover;
    cover.letters.push_back({'a', r - 1 - i});
    LevelSeq cur = apply_op(y, cover.letters.back());
    // The bump cascades right until the sequence is nondecreasing again.
    int j = i + 1;
    while (j + 1 < r && cur[static_cast<std::size_t>(j)] > cur[static_cast<std::size_t>(j + 1)]) {
      cover.letters.push_back({'b', r - 1 - j});
      cur = apply_op(cur, cover.letters.back());
      ++j;
    }
    cover.to = std::move(cur);
    covers.push_back(std::move(cover));
  }
  return covers;
}

std::vector<PermCover> perm_covers(const LevelSeq& seq) {
  if (!is_level_seq(seq)) throw std::invalid_argument("perm_covers: not an S_r element");
  const int r = static_cast<int>(seq.size());
  std::vector<PermCover> covers;
  for (int i = 0; i + 1 < r; ++i) {
    int m = seq[static_cast<std::size_t>(i)], n = seq[static_cast<std::size_t>(i + 1)];
    if (m < n) continue;
    OpLetter op{m == n ? 'a' : 'b', r - 1 - i};
    covers.push_back({apply_op(seq, op), op});
  }
  return covers;
}

std::vector<std::array<int, 3>> node_triples(const BinaryTree& tree) {
  const int r = tree.size();
  std::vector<std::array<int, 3>> triples(static_cast<std::size_t>(r) + 1);
  // Recursively compute the span (i,k) of each subtree; leaf j spans (j, j+1).
  auto span = [&](auto&& self, int child) -> std::pair<int, int> {
    if (child < 0) return {-child, -child + 1};
    const auto& nd = tree.nodes[static_cast<std::size_t>(child)];
    auto l = self(self, nd.left);
    auto rr = self(self, nd.right);
    triples[static_cast<std::size_t>(child)] = {l.first, l.second, rr.second};
    return {l.first, rr.second};
  };
  span(span, tree.root);
  triples.erase(triples.begin());
  return triples;
}

}  // namespace kptrop
