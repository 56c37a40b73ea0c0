#include "permball/basis.hpp"

#include <gtest/gtest.h>

#include "permball/enumeration.hpp"
#include "permball/patterns.hpp"
#include "permball/text_format.hpp"

namespace permball {
namespace {

constexpr Model kTd = Model::BlockTransposition;
constexpr Model kPtd = Model::PrefixTransposition;

Permutation P(const char* text) { return parse_permutation(text); }

PermSet set_of(std::initializer_list<const char*> texts) {
  PermSet out;
  for (const char* t : texts) out.insert(P(t));
  return out;
}

// Exhaustive result for the prefix model at radius 2.
const PermSet& ptd_k2_basis() {
  static const PermSet s =
      set_of({"1432", "2143", "4321", "13524", "14253", "24351", "25314", "35142", "35214",
              "35241", "41352", "42513", "42531", "43152", "51324", "52413", "53142"});
  return s;
}

bool avoids_all(const Permutation& p, const PermSet& basis) {
  for (const auto& b : basis) {
    if (contains_pattern(p, b)) return false;
  }
  return true;
}

TEST(Basis, LengthBounds) {
  EXPECT_EQ(basis_length_bound(1, kTd), 4u);
  EXPECT_EQ(basis_length_bound(2, kTd), 7u);
  EXPECT_EQ(basis_length_bound(2, kPtd), 5u);
}

TEST(Basis, TdRadiusOne) {
  DistanceEngine engine;
  const auto report = basis(1, kTd, false, engine);
  EXPECT_EQ(report.elements, set_of({"321", "2143", "2413", "3142"}));
  EXPECT_EQ(report.length_bound_used, 4u);
  EXPECT_FALSE(report.probe_result.has_value());
  EXPECT_EQ(basis_via_poset_descent(1, kTd).elements, report.elements);
}

TEST(Basis, PtdRadiusOne) {
  DistanceEngine engine;
  const auto report = basis(1, kPtd, false, engine);
  EXPECT_EQ(report.elements, set_of({"132", "321"}));
  EXPECT_EQ(basis_via_poset_descent(1, kPtd).elements, report.elements);
}

TEST(Basis, PtdRadiusTwo) {
  DistanceEngine engine;
  const auto report = basis(2, kPtd, false, engine);
  EXPECT_EQ(report.elements, ptd_k2_basis());
  EXPECT_EQ(basis_via_poset_descent(2, kPtd).elements, report.elements);
}

// 25413 has distance 3 but contains 1432 (entries 2 5 4 3), so it is not
// minimal.
TEST(Basis, PtdRadiusTwoExcludes25413) {
  EXPECT_TRUE(contains_pattern(P("25413"), P("1432")));
  EXPECT_GT(distance(P("1432"), kPtd), 2);
  EXPECT_GT(distance(P("25413"), kPtd), 2);
  EXPECT_FALSE(ptd_k2_basis().contains(P("25413")));
}

TEST(Basis, MethodsAgreeTdRadiusTwo) {
  DistanceEngine engine;
  const auto filtered = basis(2, kTd, false, engine);
  EXPECT_EQ(basis_via_poset_descent(2, kTd).elements, filtered.elements);
  EXPECT_EQ(filtered.elements.size(), 37u);
}

TEST(Basis, ProbesPastTheBoundFindNothing) {
  DistanceEngine engine;
  struct Case {
    int k;
    Model m;
  };
  for (const Case c : {Case{1, kTd}, Case{1, kPtd}, Case{2, kPtd}}) {
    const auto report = basis(c.k, c.m, true, engine);
    ASSERT_TRUE(report.probe_result.has_value());
    EXPECT_EQ(report.probe_result->length, basis_length_bound(c.k, c.m) + 1);
    EXPECT_TRUE(report.probe_result->found.empty()) << model_name(c.m) << " k=" << c.k;
  }
}

TEST(Basis, ElementInvariants) {
  DistanceEngine engine;
  for (const Model m : {kTd, kPtd}) {
    for (int k = 1; k <= 2; ++k) {
      const auto elements = basis(k, m, false, engine).elements;
      for (const auto& e : elements) {
        EXPECT_GT(engine.distance(e, m), k);
        EXPECT_TRUE(is_plus_irreducible(e)) << format_permutation(e);
        EXPECT_NE(e.back(), static_cast<int>(e.size())) << format_permutation(e);
        if (m == kTd) EXPECT_NE(e.front(), 1) << format_permutation(e);
        for (const auto& d : one_point_deletions(e)) EXPECT_LE(engine.distance(d, m), k);
        for (const auto& other : elements) {
          if (other != e) EXPECT_FALSE(contains_pattern(e, other));
        }
      }
    }
  }
}

TEST(Basis, AvoidanceCharacterizesTheBall) {
  DistanceEngine engine;
  for (const Model m : {kTd, kPtd}) {
    for (int k = 1; k <= 2; ++k) {
      const auto elements = basis(k, m, false, engine).elements;
      for (std::size_t n = 1; n <= 6; ++n) {
        const auto table = engine.table(n, m);
        for_each_permutation(n, [&](const Permutation& p) {
          ASSERT_EQ(table->at(p) <= k, avoids_all(p, elements))
              << model_name(m) << " k=" << k << " " << format_permutation(p);
        });
      }
    }
  }
}

TEST(Basis, ClassClosure) {
  DistanceEngine engine;
  for (const Model m : {kTd, kPtd}) {
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(verify_class_closure(k, m, 6, engine));
  }
}

TEST(Basis, Errors) {
  DistanceEngine engine;
  EXPECT_THROW(basis(0, kTd, false, engine), std::invalid_argument);
  EXPECT_THROW(basis_via_poset_descent(0, kPtd), std::invalid_argument);
  EXPECT_THROW(basis(3, kTd, false, engine), BudgetExceeded);
}

}  // namespace
}  // namespace permball
