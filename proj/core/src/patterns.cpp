#include "permball/patterns.hpp"

#include <stdexcept>

namespace permball {

namespace {

Permutation delete_position(const Permutation& p, std::size_t pos) {
  const int removed = p[pos];
  std::vector<int> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == pos) continue;
    out.push_back(p[i] > removed ? p[i] - 1 : p[i]);
  }
  return Permutation(std::move(out));
}

// For each pattern index m, the earlier indices holding the nearest smaller
// and nearest larger values. A candidate text entry for index m only has to
// fall strictly between the text entries matched to those two.
struct PatternBounds {
  std::vector<int> below;  // -1 when none
  std::vector<int> above;

  explicit PatternBounds(const Permutation& patt)
      : below(patt.size(), -1), above(patt.size(), -1) {
    for (std::size_t m = 0; m < patt.size(); ++m) {
      for (std::size_t l = 0; l < m; ++l) {
        if (patt[l] < patt[m] && (below[m] < 0 || patt[l] > patt[below[m]])) {
          below[m] = static_cast<int>(l);
        }
        if (patt[l] > patt[m] && (above[m] < 0 || patt[l] < patt[above[m]])) {
          above[m] = static_cast<int>(l);
        }
      }
    }
  }
};

bool embed(const Permutation& text, const Permutation& patt, const PatternBounds& bounds,
           std::vector<std::size_t>& chosen, std::size_t next_text) {
  const std::size_t m = chosen.size();
  if (m == patt.size()) return true;
  const std::size_t remaining = patt.size() - m;
  for (std::size_t t = next_text; t + remaining <= text.size(); ++t) {
    if (bounds.below[m] >= 0 && text[t] < text[chosen[bounds.below[m]]]) continue;
    if (bounds.above[m] >= 0 && text[t] > text[chosen[bounds.above[m]]]) continue;
    chosen.push_back(t);
    if (embed(text, patt, bounds, chosen, t + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Strip> strips(const Permutation& p) {
  std::vector<Strip> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (i == p.size() || p[i] != p[i - 1] + 1) {
      out.push_back({start + 1, i - start});
      start = i;
    }
  }
  return out;
}

bool is_plus_irreducible(const Permutation& p) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] == p[i - 1] + 1) return false;
  }
  return true;
}

Permutation reduce(const Permutation& p) {
  std::vector<int> minima;
  for (const auto& s : strips(p)) minima.push_back(p[s.start - 1]);
  return Permutation::standardize(minima);
}

bool contains_pattern(const Permutation& text, const Permutation& patt) {
  if (patt.size() > text.size()) return false;
  if (patt.empty()) return true;
  PatternBounds bounds(patt);
  std::vector<std::size_t> chosen;
  chosen.reserve(patt.size());
  return embed(text, patt, bounds, chosen, 0);
}

PermSet one_point_deletions(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument("one_point_deletions: empty permutation");
  }
  std::vector<Permutation> out;
  out.reserve(p.size());
  for (std::size_t pos = 0; pos < p.size(); ++pos) out.push_back(delete_position(p, pos));
  return PermSet(std::move(out));
}

Permutation monotone_inflate(const Permutation& p, const InflationVector& v) {
  if (v.size() != p.size()) {
    throw std::invalid_argument("monotone_inflate: inflation vector has length " +
                                std::to_string(v.size()) + ", permutation has length " +
                                std::to_string(p.size()));
  }
  const auto inverse = p.inverse();
  std::vector<int> offset(p.size() + 1, 0);
  for (std::size_t value = 1; value <= p.size(); ++value) {
    offset[value] = offset[value - 1] + static_cast<int>(v[inverse[value - 1] - 1]);
  }
  std::vector<int> out;
  out.reserve(offset[p.size()]);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int base = offset[p[i] - 1];
    for (std::size_t r = 0; r < v[i]; ++r) out.push_back(base + static_cast<int>(r) + 1);
  }
  return Permutation(std::move(out));
}

bool mi_member(const Permutation& p, const Permutation& alpha) {
  if (!is_plus_irreducible(alpha)) {
    throw std::invalid_argument("mi_member: base permutation is not plus irreducible");
  }
  return contains_pattern(alpha, reduce(p));
}

std::size_t breakpoint_count(const Permutation& p) {
  if (p.empty()) {
    throw std::invalid_argument("breakpoint_count: empty permutation");
  }
  std::size_t count = 0;
  if (p.front() != 1) ++count;
  if (p.back() != static_cast<int>(p.size())) ++count;
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] != p[i - 1] + 1) ++count;
  }
  return count;
}

}  // namespace permball
