#include "kptrop/index_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace kptrop {

IndexSet::IndexSet(std::initializer_list<int> idx) : IndexSet(std::vector<int>(idx)) {}

IndexSet::IndexSet(std::vector<int> idx) : idx_(std::move(idx)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet IndexSet::full(int count) {
  std::vector<int> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int k) const {
  return std::binary_search(idx_.begin(), idx_.end(), k);
}

IndexSet IndexSet::without(int k) const {
  if (!contains(k)) throw std::invalid_argument("IndexSet::without: index not present");
  std::vector<int> v;
  v.reserve(idx_.size() - 1);
  for (int i : idx_)
    if (i != k) v.push_back(i);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::with(int k) const {
  if (contains(k)) throw std::invalid_argument("IndexSet::with: index already present");
  std::vector<int> v = idx_;
  v.push_back(k);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::complement(int m) const {
  std::vector<int> v;
  for (int i = 1; i <= m; ++i)
    if (!contains(i)) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

std::string IndexSet::str() const {
  bool compact = std::all_of(idx_.begin(), idx_.end(), [](int i) { return i >= 0 && i <= 9; });
  std::string s;
  if (compact) {
    for (int i : idx_) s += static_cast<char>('0' + i);
    return s;
  }
  s = "{";
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx_[i]);
  }
  s += '}';
  return s;
}

std::vector<IndexSet> subsets_of_size(int m, int size) {
  std::vector<IndexSet> out;
  if (size < 0 || size > m) return out;
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(pick);
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - (size - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace kptrop
