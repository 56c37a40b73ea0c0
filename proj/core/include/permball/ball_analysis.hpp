#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "permball/distance_engine.hpp"
#include "permball/errors.hpp"
#include "permball/models.hpp"
#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

// Sorted multiset {i, j, k} of 1-based positions, i <= j <= k.
struct IndexMultiset {
  int i = 1;
  int j = 1;
  int k = 1;

  // Sorts the three positions.
  static IndexMultiset of(int a, int b, int c);

  friend bool operator==(const IndexMultiset&, const IndexMultiset&) = default;
};

// All multisets of cardinality 3 drawn from {1, ..., n}.
std::vector<IndexMultiset> index_multisets(std::size_t n);

struct TdInflation {
  Permutation inflated;    // strips of length multiplicity + 1 at I
  Permutation generated;   // after the transposition (i+1, j+2, k+3)
};

// Throws std::invalid_argument when p is not plus irreducible or I is out of
// range.
TdInflation td_inflate(const Permutation& p, const IndexMultiset& index);

/**
 * One of the three ways a prefix-model generator of length m becomes a
 * generator of length m + 2. Positions are 1-based positions in the parent.
 *
 *  - Ascending:  parent = π a ρ b γ with a < b, a before b;
 *                child  = (a+1) ρ̂ (b+1) π̂ a (b+2) γ̂
 *  - Descending: parent = π a ρ b γ with a > b, a before b;
 *                child  = (a+2) ρ̂ b π̂ (a+1) (b+1) γ̂
 *  - Single:     parent = π a ρ;
 *                child  = (a+1) π̂ a (a+2) ρ̂
 *
 * Hatted words are relabeled: +1 for values strictly between the chosen
 * pair, +2 above the larger one.
 */
struct PtdCase {
  enum class Kind { Ascending, Descending, Single };

  Kind kind = Kind::Single;
  std::size_t pos_a = 1;
  std::size_t pos_b = 0;  // unused for Single

  static PtdCase single(std::size_t pos_a) { return {Kind::Single, pos_a, 0}; }
  static PtdCase pair(Kind kind, std::size_t pos_a, std::size_t pos_b) {
    return {kind, pos_a, pos_b};
  }

  friend bool operator==(const PtdCase&, const PtdCase&) = default;
};

std::string_view ptd_case_name(PtdCase::Kind kind);

// Every decomposition of a parent of length m: C(m, 2) ordered position
// pairs tagged by value order, then m single positions.
std::vector<PtdCase> ptd_decompositions(const Permutation& parent);

// Throws std::invalid_argument if the decomposition is out of range or does
// not match its declared kind, or p is not plus irreducible.
Permutation ptd_inflate(const Permutation& p, const PtdCase& c);

struct PtdParent {
  Permutation parent;
  PtdCase how;
};

// Inverts ptd_inflate using the right neighbor of s[0] - 1. Throws
// std::invalid_argument when s starts with 1, is not plus irreducible, or
// no case reproduces s.
PtdParent ptd_parent(const Permutation& s);

enum class GenerationMethod { Direct, Constructive };
std::string_view method_name(GenerationMethod m);
GenerationMethod parse_method(std::string_view name);

struct GeneratingSetReport {
  int k = 0;
  Model model = Model::BlockTransposition;
  GenerationMethod method = GenerationMethod::Direct;
  PermSet elements;
  std::size_t element_length = 0;
};

// Length of every generator of B_k: 3k + 1 (td) or 2k + 1 (ptd).
std::size_t generator_length(int k, Model m);

// Iterated inflation from the length-1 identity, deduplicated per round.
GeneratingSetReport generating_set_constructive(int k, Model m, const Budget& budget = {});

// Plus irreducible permutations of generator_length(k, m) at distance
// exactly k.
GeneratingSetReport generating_set_direct(int k, Model m, DistanceEngine& engine);

bool mi_union_member(const Permutation& p, const GeneratingSetReport& generators);
bool mi_union_member(const Permutation& p, const PermSet& generators);

// Members of MI(alpha) of length at most n_max.
PermSet mi_members(const Permutation& alpha, std::size_t n_max, const Budget& budget = {});

/**
 * Permutations of length at most n_max in the union of MI(α̃_I) over every
 * index multiset I of alpha. These are exactly the permutations within one
 * block transposition of MI(alpha).
 */
PermSet mi_plus_one(const Permutation& alpha, std::size_t n_max, const Budget& budget = {});

}  // namespace permball
