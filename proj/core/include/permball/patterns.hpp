#pragma once

#include <cstddef>
#include <vector>

#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

// A maximal run of positions whose values increase by exactly one.
// `start` is a 1-based position.
struct Strip {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Strip&, const Strip&) = default;
};

// Non-negative run length per position of a base permutation. Zero entries
// delete the corresponding point.
using InflationVector = std::vector<std::size_t>;

std::vector<Strip> strips(const Permutation& p);

// No position i with p[i+1] == p[i] + 1. True for n <= 1.
bool is_plus_irreducible(const Permutation& p);

// Collapses every strip to a single point and rescales. The result is plus
// irreducible and is a pattern of `p`.
Permutation reduce(const Permutation& p);

// True iff some subsequence of `text` is order-isomorphic to `patt`.
bool contains_pattern(const Permutation& text, const Permutation& patt);

// All distinct permutations obtained by deleting one entry and rescaling.
// Throws std::invalid_argument on the empty permutation.
PermSet one_point_deletions(const Permutation& p);

// Replaces entry i by an increasing run of length v[i]; runs keep the
// relative order of the entries they replace.
Permutation monotone_inflate(const Permutation& p, const InflationVector& v);

/**
 * Membership in MI(alpha), the set of all monotone inflations of `alpha`
 * (zero-length runs allowed).
 *
 * A plus irreducible inflation cannot contain a run of length two or more,
 * so p lies in MI(alpha) exactly when reduce(p) is a pattern of alpha.
 * Throws std::invalid_argument when alpha is not plus irreducible.
 */
bool mi_member(const Permutation& p, const Permutation& alpha);

// Breakpoints among 0..n: internal i with p[i+1] != p[i] + 1, plus 0 when
// p starts with something other than 1 and n when it ends with something
// other than n. Throws std::invalid_argument on the empty permutation.
std::size_t breakpoint_count(const Permutation& p);

}  // namespace permball
