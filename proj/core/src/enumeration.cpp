#include "permball/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace permball {

namespace {

// Depth-first, smallest value first, so output is lexicographic.
void extend_plus_irreducible(std::vector<int>& prefix, std::vector<bool>& used, std::size_t n,
                             std::vector<Permutation>& out) {
  if (prefix.size() == n) {
    out.emplace_back(prefix);
    return;
  }
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    if (used[v]) continue;
    if (!prefix.empty() && v == prefix.back() + 1) continue;
    used[v] = true;
    prefix.push_back(v);
    extend_plus_irreducible(prefix, used, n, out);
    prefix.pop_back();
    used[v] = false;
  }
}

}  // namespace

BigInt plus_irreducible_count(std::size_t n) {
  BigInt prev = 1;  // f_0
  BigInt cur = 1;   // f_1
  if (n == 0) return prev;
  for (std::size_t m = 2; m <= n; ++m) {
    BigInt next = BigInt(m) * cur + BigInt(m - 1) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::uint64_t factorial_saturating(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    if (f > std::numeric_limits<std::uint64_t>::max() / i) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    f *= i;
  }
  return f;
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

PermSet enumerate_plus_irreducible(std::size_t n, const Budget& budget) {
  budget.require_length(n, "enumerate_plus_irreducible");
  std::vector<Permutation> out;
  std::vector<int> prefix;
  std::vector<bool> used(n + 1, false);
  extend_plus_irreducible(prefix, used, n, out);
  return PermSet(std::move(out));
}

}  // namespace permball
