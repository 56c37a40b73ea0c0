#include "permball/distance_engine.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "packed.hpp"
#include "permball/enumeration.hpp"
#include "permball/patterns.hpp"

namespace permball {

namespace {

int model_index(Model m) { return m == Model::BlockTransposition ? 0 : 1; }

void require_packable(std::size_t n, const char* what) {
  if (n > kMaxPackedLength) {
    throw BudgetExceeded(std::string(what) + ": length " + std::to_string(n) +
                         " exceeds the packed-key limit of " + std::to_string(kMaxPackedLength));
  }
}

}  // namespace

DistanceTable::DistanceTable(std::size_t n, Model model,
                             std::unordered_map<std::uint64_t, std::uint8_t> dist)
    : n_(n), model_(model), dist_(std::move(dist)) {
  for (const auto& [key, d] : dist_) diameter_ = std::max<int>(diameter_, d);
}

int DistanceTable::at(const Permutation& p) const {
  if (p.size() != n_) {
    throw std::invalid_argument("DistanceTable: expected length " + std::to_string(n_) +
                                ", got " + std::to_string(p.size()));
  }
  return dist_.at(packed::pack(p));
}

DistanceEngine::DistanceEngine(Budget budget) : budget_(budget) {}

int DistanceEngine::distance(const Permutation& p, Model m) {
  budget_.require_length(p.size(), "distance");
  require_packable(p.size(), "distance");
  const Permutation query = m == Model::BlockTransposition ? reduce(p) : p;
  if (query.size() <= 1 || query.is_identity()) return 0;

  const auto key = packed::pack(query);
  auto& memo = memo_[model_index(m)][query.size()];
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const int d = search(query, m);
  std::lock_guard lock(mutex_);
  memo.emplace(key, d);
  ++searches_;
  return d;
}

std::size_t DistanceEngine::searches_run() const {
  std::lock_guard lock(mutex_);
  return searches_;
}

int DistanceEngine::search(const Permutation& p, Model m) const {
  using Visited = std::unordered_map<packed::Key, int>;
  const auto n = p.size();
  const auto moves = packed::moves(n, m);

  struct Side {
    Visited seen;
    std::vector<packed::Key> frontier;
    int depth = 0;
  };
  Side from_p;
  Side from_id;
  from_p.seen.emplace(packed::pack(p), 0);
  from_p.frontier.push_back(packed::pack(p));
  from_id.seen.emplace(packed::identity(n), 0);
  from_id.frontier.push_back(packed::identity(n));

  while (!from_p.frontier.empty() && !from_id.frontier.empty()) {
    Side& grow = from_p.frontier.size() <= from_id.frontier.size() ? from_p : from_id;
    const Side& other = &grow == &from_p ? from_id : from_p;

    int best = std::numeric_limits<int>::max();
    std::vector<packed::Key> next;
    for (const auto w : grow.frontier) {
      for (const auto& mv : moves) {
        const auto y = mv.apply(w);
        if (!grow.seen.emplace(y, grow.depth + 1).second) continue;
        next.push_back(y);
        if (auto hit = other.seen.find(y); hit != other.seen.end()) {
          best = std::min(best, grow.depth + 1 + hit->second);
        }
      }
    }
    if (best != std::numeric_limits<int>::max()) return best;
    grow.frontier = std::move(next);
    ++grow.depth;
    budget_.require_states(from_p.seen.size() + from_id.seen.size(), "distance search");
  }
  throw std::logic_error("distance search exhausted without meeting");
}

std::shared_ptr<const DistanceTable> DistanceEngine::table(std::size_t n, Model m) {
  const auto slot = std::make_pair(n, model_index(m));
  {
    std::lock_guard lock(mutex_);
    if (auto it = tables_.find(slot); it != tables_.end()) return it->second;
  }
  budget_.require_length(n, "distance table");
  require_packable(n, "distance table");
  budget_.require_states(factorial_saturating(n), "distance table");

  std::unordered_map<std::uint64_t, std::uint8_t> dist;
  dist.reserve(factorial_saturating(n));
  const auto moves = packed::moves(n, m);
  std::vector<packed::Key> frontier{packed::identity(n)};
  dist.emplace(frontier.front(), 0);
  for (std::uint8_t depth = 1; !frontier.empty(); ++depth) {
    std::vector<packed::Key> next;
    for (const auto w : frontier) {
      for (const auto& mv : moves) {
        const auto y = mv.apply(w);
        if (dist.emplace(y, depth).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  auto result = std::make_shared<const DistanceTable>(n, m, std::move(dist));
  std::lock_guard lock(mutex_);
  return tables_.emplace(slot, std::move(result)).first->second;
}

DistanceEngine& default_engine() {
  static DistanceEngine engine;
  return engine;
}

int distance(const Permutation& p, Model m) { return default_engine().distance(p, m); }

int pairwise_distance(DistanceEngine& engine, const Permutation& p, const Permutation& q,
                      Model m) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("pairwise_distance: length mismatch");
  }
  return engine.distance(compose(q.inverse(), p), m);
}

int pairwise_distance(const Permutation& p, const Permutation& q, Model m) {
  return pairwise_distance(default_engine(), p, q, m);
}

PermSet ball(std::size_t n, int k, Model m, const Budget& budget) {
  if (k < 0) throw std::invalid_argument("ball: negative radius");
  budget.require_length(n, "ball");
  require_packable(n, "ball");

  std::unordered_set<packed::Key> seen{packed::identity(n)};
  std::vector<packed::Key> frontier{packed::identity(n)};
  const auto moves = packed::moves(n, m);
  for (int level = 0; level < k && !frontier.empty(); ++level) {
    std::vector<packed::Key> next;
    for (const auto w : frontier) {
      for (const auto& mv : moves) {
        const auto y = mv.apply(w);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    budget.require_states(seen.size(), "ball");
    frontier = std::move(next);
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto key : seen) out.push_back(packed::unpack(key, n));
  return PermSet(std::move(out));
}

}  // namespace permball
