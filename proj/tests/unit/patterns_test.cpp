#include "permball/patterns.hpp"

#include <random>

#include <gtest/gtest.h>

#include "permball/enumeration.hpp"
#include "permball/text_format.hpp"
#include "support/oracles.hpp"

namespace permball {
namespace {

Permutation P(const char* text) { return parse_permutation(text); }

TEST(Strips, Examples) {
  EXPECT_EQ(strips(P("435612789")),
            (std::vector<Strip>{{1, 1}, {2, 1}, {3, 2}, {5, 2}, {7, 3}}));
  EXPECT_EQ(strips(Permutation::identity(5)), (std::vector<Strip>{{1, 5}}));
  EXPECT_EQ(strips(P("321")), (std::vector<Strip>{{1, 1}, {2, 1}, {3, 1}}));
  EXPECT_TRUE(strips(Permutation()).empty());
}

TEST(Strips, PartitionPositionsMaximally) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& p : oracle::all_perms(n)) {
      std::size_t next = 1;
      for (const auto& s : strips(p)) {
        ASSERT_EQ(s.start, next);
        for (std::size_t i = 1; i < s.length; ++i) {
          ASSERT_EQ(p[s.start - 1 + i], p[s.start - 2 + i] + 1);
        }
        if (s.start > 1) ASSERT_NE(p[s.start - 1], p[s.start - 2] + 1);
        next = s.start + s.length;
      }
      ASSERT_EQ(next, n + 1);
    }
  }
}

TEST(PlusIrreducible, Examples) {
  EXPECT_TRUE(is_plus_irreducible(P("1324")));
  EXPECT_FALSE(is_plus_irreducible(P("435612789")));
  EXPECT_TRUE(is_plus_irreducible(P("1")));
  EXPECT_TRUE(is_plus_irreducible(Permutation()));
  EXPECT_FALSE(is_plus_irreducible(P("12")));
}

TEST(Reduce, Examples) {
  EXPECT_EQ(reduce(P("435612789")), P("32415"));
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(reduce(Permutation::identity(n)), P("1"));
  EXPECT_EQ(reduce(P("3142")), P("3142"));
}

TEST(Reduce, IdempotentPlusIrreducibleAndContained) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      const auto r = reduce(p);
      ASSERT_TRUE(is_plus_irreducible(r));
      ASSERT_EQ(reduce(r), r);
      ASSERT_TRUE(contains_pattern(p, r));
    });
  }
}

TEST(ContainsPattern, Examples) {
  EXPECT_TRUE(contains_pattern(P("1352647"), P("1324")));
  EXPECT_TRUE(contains_pattern(P("2413"), P("2413")));
  EXPECT_FALSE(contains_pattern(P("123"), P("321")));
  EXPECT_TRUE(contains_pattern(P("123"), Permutation()));
  EXPECT_FALSE(contains_pattern(P("12"), P("123")));
}

TEST(ContainsPattern, AgreesWithSubsequenceEnumeration) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto text = oracle::random_perm(1 + rng() % 8, rng);
    const auto patt = oracle::random_perm(1 + rng() % 5, rng);
    ASSERT_EQ(contains_pattern(text, patt),
              oracle::contains(oracle::word(text), oracle::word(patt)))
        << format_permutation(text) << " / " << format_permutation(patt);
  }
}

TEST(ContainsPattern, IsAPartialOrder) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = oracle::random_perm(1 + rng() % 7, rng);
    const auto b = oracle::random_perm(1 + rng() % 7, rng);
    const auto c = oracle::random_perm(1 + rng() % 7, rng);
    ASSERT_TRUE(contains_pattern(a, a));
    if (a.size() == b.size() && contains_pattern(a, b) && contains_pattern(b, a)) {
      ASSERT_EQ(a, b);
    }
    if (contains_pattern(a, b) && contains_pattern(b, c)) ASSERT_TRUE(contains_pattern(a, c));
    // Deletions give a guaranteed chain a ≥ d ≥ dd.
    if (a.size() >= 2) {
      const auto d = *one_point_deletions(a).begin();
      const auto dd = *one_point_deletions(d).begin();
      ASSERT_TRUE(contains_pattern(a, d));
      ASSERT_TRUE(contains_pattern(d, dd));
      ASSERT_TRUE(contains_pattern(a, dd));
    }
  }
}

TEST(OnePointDeletions, Examples) {
  EXPECT_EQ(one_point_deletions(P("321")), PermSet({P("21")}));
  EXPECT_EQ(one_point_deletions(P("1324")), PermSet({P("132"), P("213"), P("123")}));
  EXPECT_EQ(one_point_deletions(P("12")), PermSet({P("1")}));
  EXPECT_EQ(one_point_deletions(P("1")), PermSet({Permutation()}));
  EXPECT_THROW(one_point_deletions(Permutation()), std::invalid_argument);
}

TEST(MonotoneInflate, Examples) {
  EXPECT_EQ(monotone_inflate(P("41352"), {0, 2, 1, 3, 2}), P("12567834"));
  EXPECT_EQ(monotone_inflate(P("3142"), {1, 1, 1, 1}), P("3142"));
  EXPECT_EQ(monotone_inflate(P("1"), {4}), P("1234"));
  EXPECT_EQ(monotone_inflate(P("21"), {0, 0}), Permutation());
  EXPECT_THROW(monotone_inflate(P("21"), {1}), std::invalid_argument);
}

TEST(MonotoneInflate, AgreesWithOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = oracle::random_perm(1 + rng() % 6, rng);
    InflationVector v(p.size());
    for (auto& x : v) x = rng() % 4;
    ASSERT_EQ(oracle::word(monotone_inflate(p, v)), oracle::inflate(oracle::word(p), v));
  }
}

TEST(MiMember, Examples) {
  EXPECT_TRUE(mi_member(P("12567834"), P("41352")));
  EXPECT_TRUE(mi_member(P("41352"), P("41352")));
  EXPECT_FALSE(mi_member(P("321"), P("1324")));
  EXPECT_TRUE(mi_member(Permutation(), P("1324")));
  EXPECT_THROW(mi_member(P("1"), P("1234")), std::invalid_argument);
}

// For every plus irreducible alpha of length <= 5, membership agrees with the
// explicit set of inflations of total length <= 7.
TEST(MiMember, AgreesWithInflationEnumeration) {
  std::vector<std::vector<Permutation>> by_length;
  for (std::size_t n = 0; n <= 7; ++n) by_length.push_back(oracle::all_perms(n));
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& alpha : enumerate_plus_irreducible(len)) {
      const auto members = oracle::inflations(oracle::word(alpha), 7);
      for (const auto& perms : by_length) {
        for (const auto& p : perms) {
          ASSERT_EQ(mi_member(p, alpha), members.count(oracle::word(p)) == 1)
              << format_permutation(p) << " in MI(" << format_permutation(alpha) << ")";
        }
      }
    }
  }
}

// MI(π) = MI(red(π)).
TEST(MiMember, InflationClassDependsOnlyOnReduction) {
  std::vector<Permutation> targets;
  for (std::size_t n = 0; n <= 7; ++n) {
    for (auto& q : oracle::all_perms(n)) targets.push_back(std::move(q));
  }
  for (std::size_t len = 1; len <= 5; ++len) {
    for (const auto& p : oracle::all_perms(len)) {
      const auto members = oracle::inflations(oracle::word(p), 7);
      const auto r = reduce(p);
      for (const auto& q : targets) {
        ASSERT_EQ(mi_member(q, r), members.count(oracle::word(q)) == 1)
            << format_permutation(q) << " vs " << format_permutation(p);
      }
    }
  }
}

TEST(Breakpoints, Examples) {
  EXPECT_EQ(breakpoint_count(Permutation::identity(6)), 0u);
  EXPECT_EQ(breakpoint_count(P("321")), 4u);
  EXPECT_EQ(breakpoint_count(P("1352647")), 6u);
  EXPECT_EQ(breakpoint_count(P("1")), 0u);
  EXPECT_THROW(breakpoint_count(Permutation()), std::invalid_argument);
}

}  // namespace
}  // namespace permball
