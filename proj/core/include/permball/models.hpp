#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

enum class Model {
  BlockTransposition,   // td
  PrefixTransposition,  // ptd
};

// "td" / "ptd".
std::string_view model_name(Model m);
// Accepts "td" and "ptd"; throws std::invalid_argument otherwise.
Model parse_model(std::string_view name);

// Indices 1 <= i < j < k <= n + 1 selecting the adjacent blocks
// [i, j-1] and [j, k-1]. The prefix model forces i = 1.
struct TranspositionIndices {
  int i = 1;
  int j = 2;
  int k = 3;

  friend bool operator==(const TranspositionIndices&, const TranspositionIndices&) = default;
};

// Exchanges the blocks [i, j-1] and [j, k-1]. Throws std::invalid_argument
// when the indices are out of order or out of range for p.
Permutation apply_transposition(const Permutation& p, const TranspositionIndices& t);

// Every operation of model m on a permutation of length n, lexicographic in
// (i, j, k).
std::vector<TranspositionIndices> operations(std::size_t n, Model m);

// Distinct results of one operation of model m, p itself excluded.
PermSet neighbors(const Permutation& p, Model m);

}  // namespace permball
