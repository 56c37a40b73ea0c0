#include "permball/basis.hpp"

#include <map>
#include <stdexcept>

#include "permball/ball_analysis.hpp"
#include "permball/enumeration.hpp"
#include "permball/patterns.hpp"

namespace permball {

namespace {

bool all_deletions_within(const Permutation& p, const DistanceTable& shorter, int k) {
  for (const auto& q : one_point_deletions(p)) {
    if (shorter.at(q) > k) return false;
  }
  return true;
}

}  // namespace

std::size_t basis_length_bound(int k, Model m) { return generator_length(k, m); }

BasisReport basis(int k, Model m, bool probe_extra, DistanceEngine& engine) {
  if (k < 1) throw std::invalid_argument("basis: k must be at least 1");
  const auto bound = basis_length_bound(k, m);
  const auto top = bound + (probe_extra ? 1 : 0);
  engine.budget().require_length(top, "basis");
  engine.budget().require_states(factorial_saturating(top), "basis");

  std::vector<Permutation> within_bound;
  std::vector<Permutation> beyond_bound;
  for (std::size_t n = 2; n <= top; ++n) {
    const auto here = engine.table(n, m);
    const auto shorter = engine.table(n - 1, m);
    for_each_permutation(n, [&](const Permutation& p) {
      if (here->at(p) <= k || !all_deletions_within(p, *shorter, k)) return;
      (n <= bound ? within_bound : beyond_bound).push_back(p);
    });
  }

  BasisReport report{k, m, PermSet(std::move(within_bound)), bound, std::nullopt};
  if (probe_extra) report.probe_result = BasisProbe{bound + 1, PermSet(std::move(beyond_bound))};
  return report;
}

BasisReport basis_via_poset_descent(int k, Model m, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("basis: k must be at least 1");
  const auto bound = basis_length_bound(k, m);
  const auto generators = generating_set_constructive(k, m, budget).elements;

  std::map<Permutation, bool> memo;
  auto member = [&](const Permutation& p) {
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    const bool in = mi_union_member(p, generators);
    memo.emplace(p, in);
    return in;
  };

  std::vector<Permutation> seeds;
  for (const auto& p : enumerate_plus_irreducible(bound, budget)) {
    if (!member(p)) seeds.push_back(p);
  }

  std::vector<Permutation> found;
  PermSet level(std::move(seeds));
  while (!level.empty()) {
    budget.require_states(level.size(), "basis descent");
    std::vector<Permutation> below;
    for (const auto& p : level) {
      bool minimal = true;
      for (const auto& q : one_point_deletions(p)) {
        if (!member(q)) {
          minimal = false;
          below.push_back(q);
        }
      }
      if (minimal) found.push_back(p);
    }
    level = PermSet(std::move(below));
  }
  return {k, m, PermSet(std::move(found)), bound, std::nullopt};
}

bool verify_class_closure(int k, Model m, std::size_t n_max, DistanceEngine& engine) {
  if (k < 0) throw std::invalid_argument("verify_class_closure: negative radius");
  for (std::size_t n = 2; n <= n_max; ++n) {
    const auto here = engine.table(n, m);
    const auto shorter = engine.table(n - 1, m);
    bool closed = true;
    for_each_permutation(n, [&](const Permutation& p) {
      if (closed && here->at(p) <= k && !all_deletions_within(p, *shorter, k)) closed = false;
    });
    if (!closed) return false;
  }
  return true;
}

}  // namespace permball
