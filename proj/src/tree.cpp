#include "kptrop/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kptrop/visibility.hpp"

namespace kptrop {

SolitonTree tree_at_event(const SolitonConfig& config, const TimeOverrides& overrides) {
  SolitonTree tree;
  if (config.M == 1) return tree;  // single soliton, no triple points

  auto cascade = visible_cascade(config, 3, overrides);
  // Value ties at higher levels do not affect a snapshot; only a
  // coincidence among the triple points themselves (or an event sitting
  // exactly on a visible critical time, which surfaces here as a
  // non-generic visible point) degenerates the tree.
  const LevelReport& level3 = cascade.at(3);
  if (level3.degenerate)
    throw DegenerateEvent("degenerate event at the triple-point level");
  if (static_cast<int>(level3.visible.size()) != config.M - 1)
    throw DegenerateEvent("expected " + std::to_string(config.M - 1) +
                          " visible triple points, found " +
                          std::to_string(level3.visible.size()));

  // Decreasing y from the ascending report.
  std::vector<CriticalValue> by_y(level3.visible.rbegin(), level3.visible.rend());
  for (std::size_t i = 0; i + 1 < by_y.size(); ++i)
    if (by_y[i].value == by_y[i + 1].value)
      throw DegenerateEvent("tied y-values among visible triple points");

  // Branching rule: start from the root line (1, M+1); the triple (i,j,k)
  // splits the open line (i,k) into (i,j), (j,k). Applied top to bottom.
  struct Open {
    int i, k;
    int owner;   // node id owning this dangling edge, 0 for the root edge
    bool right;  // which child slot of the owner
  };
  std::vector<Open> open{{1, config.M + 1, 0, false}};
  tree.shape.nodes.resize(by_y.size() + 1);
  for (std::size_t n = 0; n < by_y.size(); ++n) {
    const IndexSet& S = by_y[n].indices;
    int i = S[0], j = S[1], k = S[2];
    auto it = std::find_if(open.begin(), open.end(),
                           [&](const Open& o) { return o.i == i && o.k == k; });
    if (it == open.end())
      throw DegenerateEvent("triple point " + S.str() + " does not match any open line");
    int id = static_cast<int>(n) + 1;
    if (it->owner == 0)
      tree.shape.root = id;
    else if (it->right)
      tree.shape.nodes[static_cast<std::size_t>(it->owner)].right = id;
    else
      tree.shape.nodes[static_cast<std::size_t>(it->owner)].left = id;
    tree.level_code.push_back(static_cast<int>(it - open.begin()) + 1);
    std::size_t pos = static_cast<std::size_t>(it - open.begin());
    open[pos] = Open{i, j, id, false};
    open.insert(open.begin() + static_cast<long>(pos) + 1, Open{j, k, id, true});
    tree.triples.push_back({i, j, k});
    tree.y_values.push_back(by_y[n].value);
  }
  // Remaining open lines must be the asymptotic legs (m, m+1).
  for (std::size_t j = 0; j < open.size(); ++j) {
    if (open[j].i != static_cast<int>(j) + 1 || open[j].k != static_cast<int>(j) + 2)
      throw DegenerateEvent("open lines do not reduce to the asymptotic pattern");
    int leaf = -static_cast<int>(j + 1);
    if (open[j].owner == 0)
      tree.shape.root = leaf;
    else if (open[j].right)
      tree.shape.nodes[static_cast<std::size_t>(open[j].owner)].right = leaf;
    else
      tree.shape.nodes[static_cast<std::size_t>(open[j].owner)].left = leaf;
  }
  tree.code = tamari_code(tree.shape);
  return tree;
}

std::vector<YEntry> apply_rotation(const std::vector<YEntry>& sequence, const IndexSet& event) {
  if (event.size() != 4) throw std::invalid_argument("apply_rotation: event needs 4 indices");
  int i = event[0], j = event[1], k = event[2], l = event[3];
  std::array<int, 3> upper{i, k, l}, lower{i, j, k};
  for (std::size_t n = 0; n + 1 < sequence.size(); ++n) {
    if (sequence[n].triple == upper && sequence[n + 1].triple == lower) {
      auto out = sequence;
      out[n].triple = {i, j, l};
      out[n + 1].triple = {j, k, l};
      return out;
    }
  }
  throw std::invalid_argument("apply_rotation: pair (y_" + IndexSet{i, k, l}.str() + ", y_" +
                              IndexSet{i, j, k}.str() + ") not adjacent in the sequence");
}

bool differ_by_one_right_rotation(const SolitonTree& before, const SolitonTree& after,
                                  const IndexSet& event) {
  if (event.size() != 4 || before.nodes() != after.nodes()) return false;
  int i = event[0], j = event[1], k = event[2], l = event[3];
  std::array<int, 3> upper{i, k, l}, lower{i, j, k};

  // Triple turnover: {ikl, ijk} out, {ijl, jkl} in, everything else fixed.
  std::multiset<std::array<int, 3>> t_before(before.triples.begin(), before.triples.end());
  std::multiset<std::array<int, 3>> t_after(after.triples.begin(), after.triples.end());
  if (!t_before.count(upper) || !t_before.count(lower)) return false;
  t_before.erase(upper);
  t_before.erase(lower);
  t_after.erase(std::array<int, 3>{i, j, l});
  t_after.erase(std::array<int, 3>{j, k, l});
  if (t_before != t_after) return false;

  // Structural check: rotate `before` at the matched node and compare shapes.
  int x = 0;
  for (std::size_t n = 0; n < before.triples.size(); ++n)
    if (before.triples[n] == upper) x = static_cast<int>(n) + 1;
  if (x == 0) return false;
  BinaryTree rotated = before.shape;
  int lchild = rotated.nodes[static_cast<std::size_t>(x)].left;
  if (lchild <= 0) return false;
  if (before.triples[static_cast<std::size_t>(lchild - 1)] != lower) return false;
  auto& nx = rotated.nodes[static_cast<std::size_t>(x)];
  auto& nl = rotated.nodes[static_cast<std::size_t>(lchild)];
  int a = nl.left, b = nl.right, c = nx.right;
  nx.left = a;
  nx.right = lchild;
  nl.left = b;
  nl.right = c;
  return tamari_code(rotated) == tamari_code(after.shape);
}

}  // namespace kptrop
