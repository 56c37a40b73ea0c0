#pragma once

#include <cstddef>
#include <vector>

#include "permball/permutation.hpp"

namespace permball {

// Deduplicated collection of permutations, iterated in lexicographic order.
class PermSet {
 public:
  using const_iterator = std::vector<Permutation>::const_iterator;

  PermSet() = default;
  explicit PermSet(std::vector<Permutation> elements);
  PermSet(std::initializer_list<Permutation> elements);

  bool insert(const Permutation& p);
  void merge(const PermSet& other);
  bool contains(const Permutation& p) const;

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  friend bool operator==(const PermSet&, const PermSet&) = default;

 private:
  std::vector<Permutation> elements_;
};

// Elements of `a` missing from `b`.
PermSet difference(const PermSet& a, const PermSet& b);

}  // namespace permball
