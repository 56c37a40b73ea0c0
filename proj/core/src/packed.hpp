#pragma once

// 4 bits per entry, value - 1, position 0 in the low nibble. Only
// meaningful together with the length it was packed at.

#include <cstdint>
#include <vector>

#include "permball/models.hpp"
#include "permball/permutation.hpp"

namespace permball::packed {

using Key = std::uint64_t;

inline Key low_mask(std::size_t entries) {
  return entries >= 16 ? ~Key{0} : (Key{1} << (4 * entries)) - 1;
}

inline Key pack(const Permutation& p) {
  Key key = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    key |= static_cast<Key>(p[i] - 1) << (4 * i);
  }
  return key;
}

inline Permutation unpack(Key key, std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>((key >> (4 * i)) & 0xF) + 1;
  return Permutation(std::move(v));
}

inline Key identity(std::size_t n) {
  Key key = 0;
  for (std::size_t i = 0; i < n; ++i) key |= static_cast<Key>(i) << (4 * i);
  return key;
}

// Block exchange on 0-based half-open ranges [a, b) and [b, c).
struct Move {
  unsigned a;
  unsigned b;
  unsigned c;

  Key apply(Key w) const {
    const Key left = (w >> (4 * a)) & low_mask(b - a);
    const Key right = (w >> (4 * b)) & low_mask(c - b);
    return (w & low_mask(a)) | (right << (4 * a)) | (left << (4 * (a + c - b))) |
           (w & ~low_mask(c));
  }
};

inline std::vector<Move> moves(std::size_t n, Model m) {
  std::vector<Move> out;
  for (const auto& t : operations(n, m)) {
    out.push_back({static_cast<unsigned>(t.i - 1), static_cast<unsigned>(t.j - 1),
                   static_cast<unsigned>(t.k - 1)});
  }
  return out;
}

}  // namespace permball::packed
