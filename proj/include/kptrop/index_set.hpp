#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace kptrop {

/// Strictly increasing, non-empty list of phase indices (1-based).
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> idx);
  explicit IndexSet(std::vector<int> idx);  // sorted + deduplicated

  static IndexSet full(int count);  // {1,...,count}

  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  int operator[](int i) const { return idx_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& indices() const { return idx_; }

  bool contains(int k) const;
  IndexSet without(int k) const;      // k must be present
  IndexSet with(int k) const;         // k must be absent
  IndexSet complement(int m) const;   // within {1..m}
  bool subset_of(const IndexSet& other) const;

  auto operator<=>(const IndexSet&) const = default;

  /// "1246" when all indices are single digits, "{3,10,12}" otherwise.
  std::string str() const;

  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

 private:
  std::vector<int> idx_;
};

/// All subsets of {1..m} of the given size, lexicographic.
std::vector<IndexSet> subsets_of_size(int m, int size);

}  // namespace kptrop
