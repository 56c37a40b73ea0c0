#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permball {

// Malformed permutation text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed its Budget. Raised instead of truncating.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Guards every enumeration. `max_len` bounds the permutation length of any
// exhaustive sweep; `max_states` bounds the number of permutations held by a
// single search or sweep.
struct Budget {
  std::size_t max_len = 10;
  std::size_t max_states = 1'000'000;

  void require_length(std::size_t n, const std::string& what) const;
  void require_states(std::size_t states, const std::string& what) const;
};

}  // namespace permball
