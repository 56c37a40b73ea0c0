#include "permball/models.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace permball {

std::string_view model_name(Model m) {
  return m == Model::BlockTransposition ? "td" : "ptd";
}

Model parse_model(std::string_view name) {
  if (name == "td") return Model::BlockTransposition;
  if (name == "ptd") return Model::PrefixTransposition;
  throw std::invalid_argument("unknown model '" + std::string(name) + "' (expected td or ptd)");
}

Permutation apply_transposition(const Permutation& p, const TranspositionIndices& t) {
  const int n = static_cast<int>(p.size());
  if (!(1 <= t.i && t.i < t.j && t.j < t.k && t.k <= n + 1)) {
    throw std::invalid_argument("transposition (" + std::to_string(t.i) + "," +
                                std::to_string(t.j) + "," + std::to_string(t.k) +
                                ") out of range for length " + std::to_string(n));
  }
  std::vector<int> out(p.begin(), p.end());
  std::rotate(out.begin() + (t.i - 1), out.begin() + (t.j - 1), out.begin() + (t.k - 1));
  return Permutation(std::move(out));
}

std::vector<TranspositionIndices> operations(std::size_t n, Model m) {
  std::vector<TranspositionIndices> out;
  const int last = static_cast<int>(n) + 1;
  const int i_max = m == Model::PrefixTransposition ? 1 : last;
  for (int i = 1; i <= i_max; ++i) {
    for (int j = i + 1; j <= last; ++j) {
      for (int k = j + 1; k <= last; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

PermSet neighbors(const Permutation& p, Model m) {
  std::vector<Permutation> out;
  for (const auto& t : operations(p.size(), m)) {
    auto q = apply_transposition(p, t);
    if (q != p) out.push_back(std::move(q));
  }
  return PermSet(std::move(out));
}

}  // namespace permball
