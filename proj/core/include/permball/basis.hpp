#pragma once

#include <cstddef>
#include <optional>

#include "permball/distance_engine.hpp"
#include "permball/models.hpp"
#include "permball/perm_set.hpp"

namespace permball {

struct BasisProbe {
  std::size_t length = 0;
  PermSet found;  // expected empty
};

struct BasisReport {
  int k = 0;
  Model model = Model::BlockTransposition;
  PermSet elements;
  std::size_t length_bound_used = 0;
  std::optional<BasisProbe> probe_result;
};

// Maximal basis length for B_k: 3k + 1 (td) or 2k + 1 (ptd).
std::size_t basis_length_bound(int k, Model m);

/**
 * Minimal permutations outside B_k, by exhaustive filtering of S_n for
 * n = 2 .. bound. A permutation qualifies when its distance exceeds k and
 * every one-point deletion lies in B_k; since B_k is closed under taking
 * patterns this is the minimality test. With probe_extra the sweep also
 * runs one length past the bound and records what it finds there.
 */
BasisReport basis(int k, Model m, bool probe_extra, DistanceEngine& engine);

// Same set, found top-down: start from the plus irreducible non-members of
// the bound length and descend through one-point deletions that stay
// outside the ball. Membership is decided by the constructive generating
// set, not by distances.
BasisReport basis_via_poset_descent(int k, Model m, const Budget& budget = {});

// Every one-point deletion of every p in B_k(n), n <= n_max, is in
// B_k(n - 1).
bool verify_class_closure(int k, Model m, std::size_t n_max, DistanceEngine& engine);

}  // namespace permball
