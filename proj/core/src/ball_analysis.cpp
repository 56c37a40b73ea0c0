#include "permball/ball_analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "permball/enumeration.hpp"
#include "permball/patterns.hpp"

namespace permball {

namespace {

void require_plus_irreducible(const Permutation& p, const char* what) {
  if (!is_plus_irreducible(p)) {
    throw std::invalid_argument(std::string(what) + ": permutation is not plus irreducible");
  }
}

std::vector<int> slice(const Permutation& p, std::size_t from, std::size_t to) {
  return {p.begin() + static_cast<std::ptrdiff_t>(from), p.begin() + static_cast<std::ptrdiff_t>(to)};
}

template <typename Relabel>
void append_relabeled(std::vector<int>& out, const std::vector<int>& word, Relabel relabel) {
  for (int x : word) out.push_back(relabel(x));
}

void collect_inflations(const Permutation& alpha, std::size_t pos, std::size_t remaining,
                        InflationVector& v, std::vector<Permutation>& out) {
  if (pos == alpha.size()) {
    out.push_back(monotone_inflate(alpha, v));
    return;
  }
  for (std::size_t run = 0; run <= remaining; ++run) {
    v[pos] = run;
    collect_inflations(alpha, pos + 1, remaining - run, v, out);
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

IndexMultiset IndexMultiset::of(int a, int b, int c) {
  int v[3] = {a, b, c};
  std::sort(std::begin(v), std::end(v));
  return {v[0], v[1], v[2]};
}

std::vector<IndexMultiset> index_multisets(std::size_t n) {
  std::vector<IndexMultiset> out;
  const int top = static_cast<int>(n);
  for (int i = 1; i <= top; ++i) {
    for (int j = i; j <= top; ++j) {
      for (int k = j; k <= top; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

TdInflation td_inflate(const Permutation& p, const IndexMultiset& index) {
  require_plus_irreducible(p, "td_inflate");
  const int n = static_cast<int>(p.size());
  if (!(1 <= index.i && index.i <= index.j && index.j <= index.k && index.k <= n)) {
    throw std::invalid_argument("td_inflate: index multiset out of range");
  }
  InflationVector v(p.size(), 1);
  ++v[index.i - 1];
  ++v[index.j - 1];
  ++v[index.k - 1];
  auto inflated = monotone_inflate(p, v);
  auto generated =
      apply_transposition(inflated, {index.i + 1, index.j + 2, index.k + 3});
  return {std::move(inflated), std::move(generated)};
}

std::string_view ptd_case_name(PtdCase::Kind kind) {
  switch (kind) {
    case PtdCase::Kind::Ascending:
      return "ascending";
    case PtdCase::Kind::Descending:
      return "descending";
    case PtdCase::Kind::Single:
      return "single";
  }
  return "?";
}

std::vector<PtdCase> ptd_decompositions(const Permutation& parent) {
  std::vector<PtdCase> out;
  for (std::size_t pa = 1; pa <= parent.size(); ++pa) {
    for (std::size_t pb = pa + 1; pb <= parent.size(); ++pb) {
      const auto kind = parent[pa - 1] < parent[pb - 1] ? PtdCase::Kind::Ascending
                                                        : PtdCase::Kind::Descending;
      out.push_back(PtdCase::pair(kind, pa, pb));
    }
  }
  for (std::size_t pa = 1; pa <= parent.size(); ++pa) out.push_back(PtdCase::single(pa));
  return out;
}

Permutation ptd_inflate(const Permutation& p, const PtdCase& c) {
  require_plus_irreducible(p, "ptd_inflate");
  const auto n = p.size();
  if (c.pos_a < 1 || c.pos_a > n) {
    throw std::invalid_argument("ptd_inflate: position of a out of range");
  }
  const int a = p[c.pos_a - 1];
  std::vector<int> out;
  out.reserve(n + 2);

  if (c.kind == PtdCase::Kind::Single) {
    auto relabel = [a](int x) { return x > a ? x + 2 : x; };
    out.push_back(a + 1);
    append_relabeled(out, slice(p, 0, c.pos_a - 1), relabel);
    out.push_back(a);
    out.push_back(a + 2);
    append_relabeled(out, slice(p, c.pos_a, n), relabel);
    return Permutation(std::move(out));
  }

  if (c.pos_b <= c.pos_a || c.pos_b > n) {
    throw std::invalid_argument("ptd_inflate: position of b must follow a");
  }
  const int b = p[c.pos_b - 1];
  const auto pi = slice(p, 0, c.pos_a - 1);
  const auto rho = slice(p, c.pos_a, c.pos_b - 1);
  const auto gamma = slice(p, c.pos_b, n);

  if (c.kind == PtdCase::Kind::Ascending) {
    if (!(a < b)) throw std::invalid_argument("ptd_inflate: ascending case needs a < b");
    auto relabel = [a, b](int x) { return x > b ? x + 2 : (x > a ? x + 1 : x); };
    out.push_back(a + 1);
    append_relabeled(out, rho, relabel);
    out.push_back(b + 1);
    append_relabeled(out, pi, relabel);
    out.push_back(a);
    out.push_back(b + 2);
    append_relabeled(out, gamma, relabel);
  } else {
    if (!(a > b)) throw std::invalid_argument("ptd_inflate: descending case needs a > b");
    auto relabel = [a, b](int x) { return x > a ? x + 2 : (x > b ? x + 1 : x); };
    out.push_back(a + 2);
    append_relabeled(out, rho, relabel);
    out.push_back(b);
    append_relabeled(out, pi, relabel);
    out.push_back(a + 1);
    out.push_back(b + 1);
    append_relabeled(out, gamma, relabel);
  }
  return Permutation(std::move(out));
}

PtdParent ptd_parent(const Permutation& s) {
  if (s.empty()) throw std::invalid_argument("ptd_parent: empty permutation");
  require_plus_irreducible(s, "ptd_parent");
  const int first = s.front();
  if (first == 1) throw std::invalid_argument("ptd_parent: generator cannot start with 1");

  const auto inverse = s.inverse();
  const auto q = static_cast<std::size_t>(inverse[first - 2] - 1);  // position of first - 1
  if (q + 1 >= s.size()) {
    throw std::invalid_argument("ptd_parent: no entry follows " + std::to_string(first - 1));
  }
  const int right = s[q + 1];
  const auto n = s.size();
  std::vector<int> parent;
  PtdCase how;

  if (right == first + 1) {
    // (a+1) π̂ a (a+2) ρ̂
    const int a = first - 1;
    auto unlabel = [a](int x) { return x > a + 2 ? x - 2 : x; };
    append_relabeled(parent, slice(s, 1, q), unlabel);
    parent.push_back(a);
    append_relabeled(parent, slice(s, q + 2, n), unlabel);
    how = PtdCase::single(q);
  } else if (right >= first + 2) {
    // (a+1) ρ̂ (b+1) π̂ a (b+2) γ̂
    const int a = first - 1;
    const int b = right - 2;
    const auto pb1 = static_cast<std::size_t>(inverse[b] - 1);  // position of b + 1
    if (pb1 < 1 || pb1 >= q) throw std::invalid_argument("ptd_parent: no ascending decomposition");
    auto unlabel = [a, b](int x) { return x > b + 2 ? x - 2 : (x > a + 1 && x < b + 1 ? x - 1 : x); };
    const auto pi = slice(s, pb1 + 1, q);
    const auto rho = slice(s, 1, pb1);
    append_relabeled(parent, pi, unlabel);
    parent.push_back(a);
    append_relabeled(parent, rho, unlabel);
    parent.push_back(b);
    append_relabeled(parent, slice(s, q + 2, n), unlabel);
    how = PtdCase::pair(PtdCase::Kind::Ascending, pi.size() + 1, pi.size() + rho.size() + 2);
  } else {
    // (a+2) ρ̂ b π̂ (a+1) (b+1) γ̂
    const int a = first - 2;
    const int b = right - 1;
    if (b < 1) throw std::invalid_argument("ptd_parent: no descending decomposition");
    const auto pb = static_cast<std::size_t>(inverse[b - 1] - 1);
    if (pb < 1 || pb >= q) throw std::invalid_argument("ptd_parent: no descending decomposition");
    auto unlabel = [a, b](int x) { return x > a + 2 ? x - 2 : (x > b + 1 && x < a + 1 ? x - 1 : x); };
    const auto pi = slice(s, pb + 1, q);
    const auto rho = slice(s, 1, pb);
    append_relabeled(parent, pi, unlabel);
    parent.push_back(a);
    append_relabeled(parent, rho, unlabel);
    parent.push_back(b);
    append_relabeled(parent, slice(s, q + 2, n), unlabel);
    how = PtdCase::pair(PtdCase::Kind::Descending, pi.size() + 1, pi.size() + rho.size() + 2);
  }

  Permutation result;
  try {
    result = Permutation(std::move(parent));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("ptd_parent: no case reproduces the permutation");
  }
  if (!is_plus_irreducible(result) || ptd_inflate(result, how) != s) {
    throw std::invalid_argument("ptd_parent: no case reproduces the permutation");
  }
  return {std::move(result), how};
}

std::string_view method_name(GenerationMethod m) {
  return m == GenerationMethod::Direct ? "direct" : "constructive";
}

GenerationMethod parse_method(std::string_view name) {
  if (name == "direct") return GenerationMethod::Direct;
  if (name == "constructive") return GenerationMethod::Constructive;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected direct or constructive)");
}

std::size_t generator_length(int k, Model m) {
  return m == Model::BlockTransposition ? 3 * static_cast<std::size_t>(k) + 1
                                        : 2 * static_cast<std::size_t>(k) + 1;
}

GeneratingSetReport generating_set_constructive(int k, Model m, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("generating set: k must be at least 1");
  budget.require_length(generator_length(k, m), "generating set");

  PermSet current{Permutation::identity(1)};
  for (int round = 0; round < k; ++round) {
    std::vector<Permutation> next;
    for (const auto& parent : current) {
      if (m == Model::BlockTransposition) {
        for (const auto& index : index_multisets(parent.size())) {
          next.push_back(td_inflate(parent, index).generated);
        }
      } else {
        for (const auto& c : ptd_decompositions(parent)) next.push_back(ptd_inflate(parent, c));
      }
      budget.require_states(next.size(), "constructive generating set");
    }
    current = PermSet(std::move(next));
  }
  return {k, m, GenerationMethod::Constructive, std::move(current), generator_length(k, m)};
}

GeneratingSetReport generating_set_direct(int k, Model m, DistanceEngine& engine) {
  if (k < 1) throw std::invalid_argument("generating set: k must be at least 1");
  const auto& budget = engine.budget();
  const auto length = generator_length(k, m);
  budget.require_length(length, "generating set");
  budget.require_states(static_cast<std::size_t>(plus_irreducible_count(length - 1)),
                        "direct generating set");

  const auto candidates = enumerate_plus_irreducible(length, budget);
  std::shared_ptr<const DistanceTable> table;
  if (factorial_saturating(length) <= budget.max_states) table = engine.table(length, m);

  std::vector<Permutation> keep;
  for (const auto& p : candidates) {
    const int d = table ? table->at(p) : engine.distance(p, m);
    if (d == k) keep.push_back(p);
  }
  return {k, m, GenerationMethod::Direct, PermSet(std::move(keep)), length};
}

bool mi_union_member(const Permutation& p, const PermSet& generators) {
  return std::any_of(generators.begin(), generators.end(),
                     [&](const Permutation& alpha) { return mi_member(p, alpha); });
}

bool mi_union_member(const Permutation& p, const GeneratingSetReport& generators) {
  return mi_union_member(p, generators.elements);
}

PermSet mi_members(const Permutation& alpha, std::size_t n_max, const Budget& budget) {
  budget.require_length(n_max, "mi_members");
  budget.require_states(binomial(n_max + alpha.size(), alpha.size()), "mi_members");
  std::vector<Permutation> out;
  InflationVector v(alpha.size(), 0);
  collect_inflations(alpha, 0, n_max, v, out);
  return PermSet(std::move(out));
}

PermSet mi_plus_one(const Permutation& alpha, std::size_t n_max, const Budget& budget) {
  require_plus_irreducible(alpha, "mi_plus_one");
  if (alpha.empty()) throw std::invalid_argument("mi_plus_one: empty base permutation");
  PermSet out;
  for (const auto& index : index_multisets(alpha.size())) {
    out.merge(mi_members(td_inflate(alpha, index).generated, n_max, budget));
  }
  return out;
}

}  // namespace permball
