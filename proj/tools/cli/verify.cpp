#include "cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include "permball/ball_analysis.hpp"
#include "permball/basis.hpp"
#include "permball/enumeration.hpp"
#include "permball/patterns.hpp"
#include "permball/text_format.hpp"

namespace permball::cli {

namespace {

using Outcome = std::pair<bool, std::string>;

std::string join(const PermSet& set, std::size_t limit = 8) {
  std::string out;
  std::size_t shown = 0;
  for (const auto& p : set) {
    if (shown == limit) {
      out += " ...";
      break;
    }
    out += (shown++ ? " " : "") + format_permutation(p);
  }
  return out;
}

Outcome compare_sets(const PermSet& expected, const PermSet& actual) {
  if (expected == actual) return {true, std::to_string(actual.size()) + " elements"};
  std::ostringstream detail;
  detail << "expected " << expected.size() << ", got " << actual.size();
  if (auto missing = difference(expected, actual); !missing.empty()) {
    detail << "; missing " << join(missing);
  }
  if (auto extra = difference(actual, expected); !extra.empty()) {
    detail << "; unexpected " << join(extra);
  }
  return {false, detail.str()};
}

Outcome count_violations(std::size_t checked, std::size_t violations,
                         const std::optional<Permutation>& example) {
  std::string detail = std::to_string(checked) + " checked, " + std::to_string(violations) +
                       " violations";
  if (example) detail += " (first: " + format_permutation(*example) + ")";
  return {violations == 0, detail};
}

class Suite {
 public:
  void run(const std::string& name, const std::function<Outcome()>& body) {
    CheckResult result{name, CheckStatus::Pass, ""};
    try {
      auto [ok, detail] = body();
      result.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
      result.detail = std::move(detail);
    } catch (const BudgetExceeded& e) {
      result.status = CheckStatus::Skipped;
      result.detail = e.what();
    } catch (const std::exception& e) {
      result.status = CheckStatus::Fail;
      result.detail = e.what();
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// Lazily computed, shared between checks.
class Artifacts {
 public:
  Artifacts(Model m, DistanceEngine& engine) : model_(m), engine_(engine) {}

  const PermSet& generators(int k) {
    auto it = generators_.find(k);
    if (it == generators_.end()) {
      it = generators_.emplace(k, generating_set_constructive(k, model_, engine_.budget()).elements)
               .first;
    }
    return it->second;
  }

  const BasisReport& basis_report(int k) {
    auto it = bases_.find(k);
    if (it == bases_.end()) it = bases_.emplace(k, basis(k, model_, true, engine_)).first;
    return it->second;
  }

 private:
  Model model_;
  DistanceEngine& engine_;
  std::map<int, PermSet> generators_;
  std::map<int, BasisReport> bases_;
};

void sweep(std::size_t n_min, std::size_t n_max, const Budget& budget,
           const std::function<void(const Permutation&)>& visit) {
  for (std::size_t n = n_min; n <= n_max; ++n) {
    budget.require_length(n, "sweep");
    budget.require_states(factorial_saturating(n), "sweep");
    for_each_permutation(n, visit);
  }
}

void golden_checks(Suite& suite, const VerifyRequest& req, const Golden& golden,
                   DistanceEngine& engine) {
  const auto& data = golden.data();
  if (data.contains("reductions")) {
    suite.run("golden.reductions", [&] {
      std::size_t bad = 0;
      for (const auto& row : data["reductions"]) {
        const auto in = parse_permutation(row["input"].get<std::string>());
        if (reduce(in) != parse_permutation(row["reduced"].get<std::string>())) ++bad;
      }
      return count_violations(data["reductions"].size(), bad, std::nullopt);
    });
  }
  if (data.contains("monotone_inflations")) {
    suite.run("golden.monotone_inflations", [&] {
      std::size_t bad = 0;
      for (const auto& row : data["monotone_inflations"]) {
        const auto base = parse_permutation(row["base"].get<std::string>());
        const auto v = row["vector"].get<InflationVector>();
        if (monotone_inflate(base, v) != parse_permutation(row["result"].get<std::string>())) ++bad;
      }
      return count_violations(data["monotone_inflations"].size(), bad, std::nullopt);
    });
  }
  if (req.model == Model::BlockTransposition && data.contains("td_inflations")) {
    suite.run("golden.td_inflations", [&] {
      std::size_t bad = 0;
      for (const auto& row : data["td_inflations"]) {
        const auto base = parse_permutation(row["base"].get<std::string>());
        const auto idx = row["index"].get<std::vector<int>>();
        const auto out = td_inflate(base, IndexMultiset::of(idx.at(0), idx.at(1), idx.at(2)));
        if (out.inflated != parse_permutation(row["inflated"].get<std::string>()) ||
            out.generated != parse_permutation(row["generated"].get<std::string>())) {
          ++bad;
        }
      }
      return count_violations(data["td_inflations"].size(), bad, std::nullopt);
    });
  }
  if (data.contains("distances")) {
    suite.run("golden.distances", [&] {
      std::size_t checked = 0;
      std::size_t bad = 0;
      for (const auto& row : data["distances"]) {
        if (parse_model(row["model"].get<std::string>()) != req.model) continue;
        ++checked;
        const auto p = parse_permutation(row["perm"].get<std::string>());
        if (engine.distance(p, req.model) != row["distance"].get<int>()) ++bad;
      }
      return count_violations(checked, bad, std::nullopt);
    });
  }
  if (data.contains("plus_irreducible_counts")) {
    suite.run("plus_irreducible.counts", [&] {
      const auto& section = data["plus_irreducible_counts"];
      const auto first = section["first_length"].get<std::size_t>();
      const auto counts = section["counts"].get<std::vector<std::uint64_t>>();
      std::size_t enumerated_through = 0;
      for (std::size_t i = 0; i < counts.size(); ++i) {
        const auto length = first + i;
        if (plus_irreducible_count(length - 1) != counts[i]) {
          return Outcome{false, "recurrence disagrees at length " + std::to_string(length)};
        }
        if (length <= std::min<std::size_t>(8, engine.budget().max_len)) {
          if (enumerate_plus_irreducible(length, engine.budget()).size() != counts[i]) {
            return Outcome{false, "enumeration disagrees at length " + std::to_string(length)};
          }
          enumerated_through = length;
        }
      }
      return Outcome{true, "lengths " + std::to_string(first) + ".." +
                               std::to_string(first + counts.size() - 1) +
                               ", enumerated through " + std::to_string(enumerated_through)};
    });
  }
}

void generating_set_checks(Suite& suite, const VerifyRequest& req, const Golden& golden,
                           DistanceEngine& engine, Artifacts& art, int k) {
  const auto m = req.model;
  const auto prefix = "genset.k" + std::to_string(k) + ".";

  suite.run(prefix + "cross_method", [&] {
    return compare_sets(generating_set_direct(k, m, engine).elements, art.generators(k));
  });
  if (auto expected = golden.generating_set(m, k)) {
    suite.run(prefix + "golden", [&] { return compare_sets(*expected, art.generators(k)); });
  }
  suite.run(prefix + "invariants", [&] {
    const auto& gens = art.generators(k);
    const auto length = generator_length(k, m);
    std::size_t bad = 0;
    std::optional<Permutation> first_bad;
    for (const auto& g : gens) {
      bool ok = g.size() == length && is_plus_irreducible(g) && engine.distance(g, m) == k &&
                g.back() == static_cast<int>(g.size());
      ok = ok && (m == Model::BlockTransposition ? g.front() == 1 : g.front() != 1);
      if (!ok && !first_bad) first_bad = g;
      bad += ok ? 0 : 1;
    }
    return count_violations(gens.size(), bad, first_bad);
  });
  if (m == Model::PrefixTransposition) {
    suite.run(prefix + "cardinality", [&] {
      std::uint64_t expected = 1;  // (2k)! / 2^k
      for (int i = 1; i <= 2 * k; ++i) expected *= static_cast<std::uint64_t>(i);
      expected >>= k;
      const auto got = art.generators(k).size();
      return Outcome{got == expected,
                     "expected " + std::to_string(expected) + ", got " + std::to_string(got)};
    });
    if (k >= 2) {
      suite.run(prefix + "parent_uniqueness", [&] {
        const auto& parents = art.generators(k - 1);
        std::map<Permutation, int> ways;
        for (const auto& parent : parents) {
          for (const auto& c : ptd_decompositions(parent)) ++ways[ptd_inflate(parent, c)];
        }
        std::size_t bad = 0;
        std::optional<Permutation> first_bad;
        for (const auto& s : art.generators(k)) {
          const auto back = ptd_parent(s);
          const bool ok = ways[s] == 1 && parents.contains(back.parent) &&
                          ptd_inflate(back.parent, back.how) == s;
          if (!ok && !first_bad) first_bad = s;
          bad += ok ? 0 : 1;
        }
        return count_violations(art.generators(k).size(), bad, first_bad);
      });
    }
  }
}

void basis_checks(Suite& suite, const VerifyRequest& req, const Golden& golden,
                  DistanceEngine& engine, Artifacts& art, int k) {
  const auto m = req.model;
  const auto prefix = "basis.k" + std::to_string(k) + ".";

  suite.run(prefix + "cross_method", [&] {
    return compare_sets(art.basis_report(k).elements,
                        basis_via_poset_descent(k, m, engine.budget()).elements);
  });
  if (auto expected = golden.basis(m, k)) {
    suite.run(prefix + "golden",
              [&] { return compare_sets(*expected, art.basis_report(k).elements); });
  }
  suite.run(prefix + "invariants", [&] {
    const auto& elements = art.basis_report(k).elements;
    std::size_t bad = 0;
    std::optional<Permutation> first_bad;
    for (const auto& e : elements) {
      bool ok = is_plus_irreducible(e) && e.back() != static_cast<int>(e.size()) &&
                engine.distance(e, m) > k;
      if (m == Model::BlockTransposition) ok = ok && e.front() != 1;
      for (const auto& q : one_point_deletions(e)) ok = ok && engine.distance(q, m) <= k;
      for (const auto& other : elements) {
        ok = ok && (other == e || !contains_pattern(e, other));
      }
      if (!ok && !first_bad) first_bad = e;
      bad += ok ? 0 : 1;
    }
    return count_violations(elements.size(), bad, first_bad);
  });
  suite.run(prefix + "probe_beyond_bound", [&] {
    const auto& probe = *art.basis_report(k).probe_result;
    return Outcome{probe.found.empty(), "length " + std::to_string(probe.length) + ": " +
                                            std::to_string(probe.found.size()) + " found"};
  });
}

void ball_checks(Suite& suite, const VerifyRequest& req, DistanceEngine& engine, Artifacts& art,
                 int k) {
  const auto m = req.model;
  const auto prefix = "ball.k" + std::to_string(k) + ".";
  const auto& budget = engine.budget();

  suite.run(prefix + "mi_union", [&] {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= req.max_n; ++n) {
      const auto expected = ball(n, k, m, budget);
      std::vector<Permutation> members;
      sweep(n, n, budget, [&](const Permutation& p) {
        if (mi_union_member(p, art.generators(k))) members.push_back(p);
      });
      auto [ok, detail] = compare_sets(expected, PermSet(std::move(members)));
      if (!ok) return Outcome{false, "n=" + std::to_string(n) + ": " + detail};
      checked += expected.size();
    }
    return Outcome{true, "n<=" + std::to_string(req.max_n) + ", " + std::to_string(checked) +
                             " members"};
  });
  suite.run(prefix + "down_set", [&] {
    return Outcome{verify_class_closure(k, m, req.max_n, engine),
                   "n<=" + std::to_string(req.max_n)};
  });
  suite.run(prefix + "nested", [&] {
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= req.max_n; ++n) {
      const auto inner = ball(n, k, m, budget);
      const auto outer = ball(n, k + 1, m, budget);
      bad += difference(inner, outer).size();
    }
    return count_violations(req.max_n, bad, std::nullopt);
  });
  suite.run(prefix + "avoidance", [&] {
    const auto& basis_elements = art.basis_report(k).elements;
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::optional<Permutation> first_bad;
    for (std::size_t n = 1; n <= req.max_n; ++n) {
      const auto table = engine.table(n, m);
      for_each_permutation(n, [&](const Permutation& p) {
        const bool avoids = std::none_of(basis_elements.begin(), basis_elements.end(),
                                         [&](const auto& b) { return contains_pattern(p, b); });
        ++checked;
        if (avoids != (table->at(p) <= k)) {
          if (!first_bad) first_bad = p;
          ++bad;
        }
      });
    }
    return count_violations(checked, bad, first_bad);
  });
}

void distance_checks(Suite& suite, const VerifyRequest& req, DistanceEngine& engine) {
  const auto m = req.model;
  const auto& budget = engine.budget();

  if (m == Model::BlockTransposition) {
    suite.run("distance.breakpoint_bound", [&] {
      std::size_t checked = 0;
      std::size_t bad = 0;
      std::optional<Permutation> first_bad;
      sweep(1, req.max_n, budget, [&](const Permutation& p) {
        ++checked;
        const auto br = static_cast<int>(breakpoint_count(p));
        if (engine.distance(p, m) < (br + 2) / 3) {
          if (!first_bad) first_bad = p;
          ++bad;
        }
      });
      return count_violations(checked, bad, first_bad);
    });
  }
  suite.run(m == Model::BlockTransposition ? "distance.reduction_invariance"
                                           : "distance.reduction_invariance.empirical",
            [&] {
              std::size_t checked = 0;
              std::size_t bad = 0;
              std::optional<Permutation> first_bad;
              for (std::size_t n = 1; n <= req.max_n; ++n) {
                const auto table = engine.table(n, m);
                for_each_permutation(n, [&](const Permutation& p) {
                  const auto r = reduce(p);
                  ++checked;
                  if (table->at(p) != engine.table(r.size(), m)->at(r)) {
                    if (!first_bad) first_bad = p;
                    ++bad;
                  }
                });
              }
              return count_violations(checked, bad, first_bad);
            });
  suite.run("distance.engine_vs_table", [&] {
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::optional<Permutation> first_bad;
    for (std::size_t n = 1; n <= std::min<std::size_t>(req.max_n, 6); ++n) {
      const auto table = engine.table(n, m);
      for_each_permutation(n, [&](const Permutation& p) {
        ++checked;
        if (engine.distance(p, m) != table->at(p)) {
          if (!first_bad) first_bad = p;
          ++bad;
        }
      });
    }
    return count_violations(checked, bad, first_bad);
  });
  suite.run("distance.left_invariance.S4", [&] {
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::vector<Permutation> s4;
    for_each_permutation(4, [&](const Permutation& p) { s4.push_back(p); });
    for (const auto& sigma : s4) {
      for (const auto& p : s4) {
        for (const auto& q : s4) {
          ++checked;
          if (pairwise_distance(engine, compose(sigma, p), compose(sigma, q), m) !=
              pairwise_distance(engine, p, q, m)) {
            ++bad;
          }
        }
      }
    }
    return count_violations(checked, bad, std::nullopt);
  });
  suite.run("distance.model_refinement", [&] {
    std::size_t checked = 0;
    std::size_t bad = 0;
    std::optional<Permutation> first_bad;
    sweep(1, std::min<std::size_t>(req.max_n, 6), budget, [&](const Permutation& p) {
      ++checked;
      if (engine.distance(p, Model::BlockTransposition) >
          engine.distance(p, Model::PrefixTransposition)) {
        if (!first_bad) first_bad = p;
        ++bad;
      }
    });
    return count_violations(checked, bad, first_bad);
  });
  if (m == Model::BlockTransposition) {
    suite.run("mi_plus_one.1324", [&] {
      const auto n_max = std::min<std::size_t>(req.max_n, 6);
      const Permutation alpha{1, 3, 2, 4};
      PermSet brute = mi_members(alpha, n_max, budget);
      for (const auto& p : mi_members(alpha, n_max, budget)) brute.merge(neighbors(p, m));
      return compare_sets(brute, mi_plus_one(alpha, n_max, budget));
    });
  }
}

}  // namespace

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIPPED";
  }
  return "?";
}

std::vector<CheckResult> run_verification(const VerifyRequest& request, const Golden& golden,
                                          DistanceEngine& engine) {
  Suite suite;
  Artifacts art(request.model, engine);
  golden_checks(suite, request, golden, engine);
  distance_checks(suite, request, engine);
  for (int k = 1; k <= request.k; ++k) {
    generating_set_checks(suite, request, golden, engine, art, k);
    basis_checks(suite, request, golden, engine, art, k);
    ball_checks(suite, request, engine, art, k);
  }
  return suite.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(),
                      [](const auto& r) { return r.status == CheckStatus::Fail; });
}

}  // namespace permball::cli
