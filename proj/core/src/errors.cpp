#include "permball/errors.hpp"

namespace permball {

void Budget::require_length(std::size_t n, const std::string& what) const {
  if (n > max_len) {
    throw BudgetExceeded(what + ": length " + std::to_string(n) + " exceeds max-len " +
                         std::to_string(max_len));
  }
}

void Budget::require_states(std::size_t states, const std::string& what) const {
  if (states > max_states) {
    throw BudgetExceeded(what + ": " + std::to_string(states) + " states exceed max-states " +
                         std::to_string(max_states));
  }
}

}  // namespace permball
