#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "permball/errors.hpp"
#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

using BigInt = boost::multiprecision::cpp_int;

// f_n = n f_{n-1} + (n-1) f_{n-2}, f_0 = f_1 = 1: the number of plus
// irreducible permutations of length n + 1.
BigInt plus_irreducible_count(std::size_t n);

// n!, saturating at UINT64_MAX.
std::uint64_t factorial_saturating(std::size_t n);

// Visits S_n in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit);

// All plus irreducible permutations of length n. Throws BudgetExceeded when
// n exceeds budget.max_len.
PermSet enumerate_plus_irreducible(std::size_t n, const Budget& budget = {});

}  // namespace permball
