#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

// Accepts the compact digit form ("1352647") and the comma-separated form
// ("10,2,3,...", any length). Surrounding whitespace is ignored. Throws
// ParseError on anything else, including non-bijective input.
Permutation parse_permutation(std::string_view text);

// Compact digit form when n <= 9, comma-separated otherwise. The empty
// permutation formats as "".
std::string format_permutation(const Permutation& p);

std::vector<std::string> format_all(const PermSet& set);

}  // namespace permball
