#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace permball {

/**
 * A permutation of {1, ..., n} in one-line notation.
 *
 * Values are 1-based, positions exposed through operator[] are 0-based.
 * The empty permutation is the identity of length 0. Ordering is
 * lexicographic on the one-line word.
 */
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `values` is a bijection of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  static Permutation identity(std::size_t n);

  // Order-isomorphic rescaling of any sequence of distinct integers,
  // e.g. {7, 2, 9} -> 213.
  static Permutation standardize(std::span<const int> word);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t pos) const { return values_[pos]; }
  std::span<const int> values() const { return values_; }
  int front() const { return values_.front(); }
  int back() const { return values_.back(); }

  bool is_identity() const;
  Permutation inverse() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// (outer ∘ inner)(x) = outer(inner(x)). Lengths must agree.
Permutation compose(const Permutation& outer, const Permutation& inner);

// Restriction to the given 0-based positions (ascending), rescaled.
Permutation restrict_to(const Permutation& p, std::span<const std::size_t> positions);

}  // namespace permball
