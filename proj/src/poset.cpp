#include "kptrop/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "kptrop/index_set.hpp"

namespace kptrop {

std::vector<std::vector<int>> Poset::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count()));
  for (std::size_t e = 0; e < edges.size(); ++e)
    adj[static_cast<std::size_t>(edges[e].from)].push_back(static_cast<int>(e));
  return adj;
}

namespace {

template <typename CoverFn>
Poset build_seq_poset(PosetKind kind, int r, CoverFn&& covers_of) {
  Poset poset;
  poset.kind = kind;
  std::map<LevelSeq, int> ids;
  std::vector<LevelSeq> nodes;
  LevelSeq min(static_cast<std::size_t>(r), 1);
  std::queue<LevelSeq> work;
  auto intern = [&](const LevelSeq& s) {
    auto [it, fresh] = ids.try_emplace(s, static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.push_back(s);
      work.push(s);
    }
    return it->second;
  };
  intern(min);
  std::vector<std::tuple<int, int, std::string>> raw_edges;
  while (!work.empty()) {
    LevelSeq cur = work.front();
    work.pop();
    int from = ids.at(cur);
    for (const auto& [to_seq, label] : covers_of(cur))
      raw_edges.emplace_back(from, intern(to_seq), label);
  }
  // Canonical node order: by sequence.
  std::vector<int> perm(nodes.size());
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    perm[order[pos]] = static_cast<int>(pos);
  poset.node_labels.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    poset.node_labels[static_cast<std::size_t>(perm[i])] = seq_str(nodes[i]);
  for (auto& [f, t, l] : raw_edges)
    poset.edges.push_back({perm[static_cast<std::size_t>(f)],
                           perm[static_cast<std::size_t>(t)], l});
  std::sort(poset.edges.begin(), poset.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  LevelSeq max(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) max[static_cast<std::size_t>(i)] = i + 1;
  poset.source = perm[static_cast<std::size_t>(ids.at(min))];
  poset.sink = perm[static_cast<std::size_t>(ids.at(max))];
  return poset;
}

std::string display_fragment(const OpWord& letters) {
  std::string s;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    s += it->kind;
    s += std::to_string(it->site);
  }
  return s;
}

}  // namespace

Poset permutohedron(int r, int bound) {
  if (r < 1) throw std::invalid_argument("permutohedron: r >= 1 required");
  if (r > bound) throw ResourceGuard("permutohedron: r exceeds configured bound");
  return build_seq_poset(PosetKind::Permutohedron, r, [](const LevelSeq& s) {
    std::vector<std::pair<LevelSeq, std::string>> out;
    for (const auto& c : perm_covers(s))
      out.push_back({c.to, display_fragment({c.letter})});
    return out;
  });
}

Poset tamari(int r, int bound) {
  if (r < 1) throw std::invalid_argument("tamari: r >= 1 required");
  if (r > bound) throw ResourceGuard("tamari: r exceeds configured bound");
  return build_seq_poset(PosetKind::Tamari, r, [](const LevelSeq& s) {
    std::vector<std::pair<LevelSeq, std::string>> out;
    for (const auto& c : tamari_covers(s))
      out.push_back({c.to, display_fragment(c.letters)});
    return out;
  });
}

Poset family_poset(PosetKind kind, int M) {
  Poset poset;
  poset.kind = kind;
  if (kind == PosetKind::Simplex) {
    if (M < 2) throw std::invalid_argument("simplex family needs M >= 2");
    for (int i = 1; i <= M + 1; ++i) poset.node_labels.push_back(std::to_string(i));
    for (int i = 1; i <= M + 1; ++i)
      for (int j = i + 1; j <= M + 1; ++j)
        poset.edges.push_back({i - 1, j - 1, "x" + IndexSet{i, j}.str()});
    poset.source = 0;
    poset.sink = M;
    return poset;
  }
  if (kind != PosetKind::Hypercube) throw std::invalid_argument("family_poset: unsupported kind");
  if (M < 3) throw std::invalid_argument("hypercube family needs M >= 3");
  // Nodes: subsequences of 1..M+1 keeping 1 and M+1.
  std::vector<IndexSet> nodes;
  std::map<IndexSet, int> ids;
  std::vector<int> middle;
  for (int i = 2; i <= M; ++i) middle.push_back(i);
  const int bits = M - 1;
  for (int mask = 0; mask < (1 << bits); ++mask) {
    std::vector<int> v{1, M + 1};
    for (int b = 0; b < bits; ++b)
      if (mask & (1 << b)) v.push_back(middle[static_cast<std::size_t>(b)]);
    nodes.emplace_back(v);
  }
  std::sort(nodes.begin(), nodes.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (std::size_t i = 0; i < nodes.size(); ++i) ids[nodes[i]] = static_cast<int>(i);
  for (const auto& node : nodes) {
    for (int pos = 1; pos + 1 < node.size(); ++pos) {
      int m = node[pos];
      IndexSet child = node.without(m);
      IndexSet label{node[pos - 1], m, node[pos + 1]};
      poset.edges.push_back({ids.at(node), ids.at(child), "y" + label.str()});
    }
  }
  for (const auto& node : nodes) poset.node_labels.push_back(node.str());
  poset.source = ids.at(IndexSet::full(M + 1));
  poset.sink = ids.at(IndexSet{1, M + 1});
  std::sort(poset.edges.begin(), poset.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
  });
  return poset;
}

std::vector<std::vector<std::string>> maximal_chains(const Poset& poset) {
  std::vector<std::vector<std::string>> chains;
  for (const auto& edge_path : maximal_chain_edges(poset)) {
    std::vector<std::string> labels;
    for (int e : edge_path) labels.push_back(poset.edges[static_cast<std::size_t>(e)].label);
    chains.push_back(std::move(labels));
  }
  std::sort(chains.begin(), chains.end());
  return chains;
}

std::vector<std::vector<int>> maximal_chain_edges(const Poset& poset) {
  std::vector<std::vector<int>> chains;
  auto adj = poset.adjacency();
  std::vector<int> path;
  auto dfs = [&](auto&& self, int node) -> void {
    if (node == poset.sink) {
      chains.push_back(path);
      return;
    }
    for (int e : adj[static_cast<std::size_t>(node)]) {
      path.push_back(e);
      self(self, poset.edges[static_cast<std::size_t>(e)].to);
      path.pop_back();
    }
  };
  dfs(dfs, poset.source);
  return chains;
}

std::string chain_word(const std::vector<std::string>& chain_labels) {
  std::string word;
  for (auto it = chain_labels.rbegin(); it != chain_labels.rend(); ++it) word += *it;
  return word;
}

namespace {

// Adjacent-letter swaps allowed by far commutation of a's.
std::set<std::string> commutation_closure(const std::string& word) {
  std::set<std::string> seen{word};
  std::queue<std::string> work;
  work.push(word);
  while (!work.empty()) {
    OpWord w = parse_op_word(work.front());
    work.pop();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].kind != 'a' || w[i + 1].kind != 'a') continue;
      if (std::abs(w[i].site - w[i + 1].site) <= 1) continue;
      OpWord swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      std::string s = op_word_str(swapped);
      if (seen.insert(s).second) work.push(s);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::vector<std::string>> far_commutation_classes(
    const std::vector<std::string>& words) {
  std::map<std::string, std::vector<std::string>> by_rep;
  for (const auto& w : words) {
    auto closure = commutation_closure(w);
    by_rep[*closure.begin()].push_back(w);
  }
  std::vector<std::vector<std::string>> classes;
  for (auto& [rep, members] : by_rep) {
    std::sort(members.begin(), members.end());
    classes.push_back(members);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<std::vector<std::string>> chain_classes(const Poset& poset) {
  // Chains as node paths; equivalence generated by replacing the middle of
  // (u, v, w) with the alternative v' closing the same square.
  auto edge_paths = maximal_chain_edges(poset);
  std::vector<std::vector<int>> node_paths;
  std::map<std::vector<int>, std::string> word_of;
  std::map<std::pair<int, int>, std::string> label_of;
  std::vector<std::set<int>> succ(static_cast<std::size_t>(poset.node_count()));
  for (const auto& e : poset.edges) {
    succ[static_cast<std::size_t>(e.from)].insert(e.to);
    label_of[{e.from, e.to}] = e.label;
  }
  for (const auto& ep : edge_paths) {
    std::vector<int> nodes{poset.source};
    std::vector<std::string> labels;
    for (int e : ep) {
      nodes.push_back(poset.edges[static_cast<std::size_t>(e)].to);
      labels.push_back(poset.edges[static_cast<std::size_t>(e)].label);
    }
    word_of[nodes] = chain_word(labels);
    node_paths.push_back(std::move(nodes));
  }
  std::map<std::vector<int>, int> cls;
  std::vector<std::vector<std::string>> classes;
  for (const auto& start : node_paths) {
    if (cls.count(start)) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({});
    std::queue<std::vector<int>> work;
    work.push(start);
    cls[start] = id;
    while (!work.empty()) {
      auto cur = work.front();
      work.pop();
      classes[static_cast<std::size_t>(id)].push_back(word_of.at(cur));
      for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
        int u = cur[i], v = cur[i + 1], w = cur[i + 2];
        for (int alt : succ[static_cast<std::size_t>(u)]) {
          if (alt == v || !succ[static_cast<std::size_t>(alt)].count(w)) continue;
          std::vector<int> swapped = cur;
          swapped[i + 1] = alt;
          if (!cls.count(swapped)) {
            cls[swapped] = id;
            work.push(swapped);
          }
        }
      }
    }
  }
  for (auto& members : classes) std::sort(members.begin(), members.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

bool braid_check(const OpWord& word1, const OpWord& word2, const LevelSeq& start) {
  return apply_word(start, word1) == apply_word(start, word2);
}

}  // namespace kptrop
