#include "permball/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace permball {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const auto n = values_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values)
    : Permutation(std::vector<int>(values)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

Permutation Permutation::standardize(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
  for (std::size_t r = 1; r < order.size(); ++r) {
    if (word[order[r]] == word[order[r - 1]]) {
      throw std::invalid_argument("standardize: repeated value");
    }
  }
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    out[order[rank]] = static_cast<int>(rank) + 1;
  }
  Permutation p;
  p.values_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    inv[values_[i] - 1] = static_cast<int>(i) + 1;
  }
  Permutation p;
  p.values_ = std::move(inv);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("compose: length mismatch");
  }
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[inner[i] - 1];
  }
  return Permutation(std::move(out));
}

Permutation restrict_to(const Permutation& p, std::span<const std::size_t> positions) {
  std::vector<int> word;
  word.reserve(positions.size());
  for (auto pos : positions) word.push_back(p[pos]);
  return Permutation::standardize(word);
}

}  // namespace permball
