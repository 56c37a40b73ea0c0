#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "permball/errors.hpp"
#include "permball/models.hpp"
#include "permball/perm_set.hpp"
#include "permball/permutation.hpp"

namespace permball {

// Longest permutation the engine can pack into a single 64-bit key.
inline constexpr std::size_t kMaxPackedLength = 16;

// Exact distance to the identity for every permutation of S_n under one
// model, produced by a full breadth-first sweep from the identity.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, Model model, std::unordered_map<std::uint64_t, std::uint8_t> dist);

  std::size_t length() const { return n_; }
  Model model() const { return model_; }
  std::size_t size() const { return dist_.size(); }
  int diameter() const { return diameter_; }

  // Throws std::invalid_argument when p is not of length n.
  int at(const Permutation& p) const;

 private:
  std::size_t n_;
  Model model_;
  std::unordered_map<std::uint64_t, std::uint8_t> dist_;
  int diameter_ = 0;
};

/**
 * Exact sorting distances under the block and prefix transposition models.
 *
 * Single queries run a level-synchronous bidirectional breadth-first search
 * between p and the identity. Block-transposition queries are first
 * collapsed to reduce(p) and memoized on that key; prefix queries are
 * memoized on p itself. Whole-S_n sweeps use DistanceTable, which is
 * computed once per (n, model) and cached.
 *
 * Every public member is safe to call concurrently.
 */
class DistanceEngine {
 public:
  explicit DistanceEngine(Budget budget = {});

  const Budget& budget() const { return budget_; }

  int distance(const Permutation& p, Model m);

  // Throws BudgetExceeded when n! exceeds budget.max_states or n exceeds
  // budget.max_len.
  std::shared_ptr<const DistanceTable> table(std::size_t n, Model m);

  // Number of bidirectional searches actually run (memo misses).
  std::size_t searches_run() const;

 private:
  int search(const Permutation& p, Model m) const;

  Budget budget_;
  mutable std::mutex mutex_;
  std::array<std::array<std::unordered_map<std::uint64_t, int>, kMaxPackedLength + 1>, 2> memo_;
  std::map<std::pair<std::size_t, int>, std::shared_ptr<const DistanceTable>> tables_;
  std::size_t searches_ = 0;
};

// Process-wide engine used by the free functions below.
DistanceEngine& default_engine();

// Length of a shortest operation sequence sorting p.
int distance(const Permutation& p, Model m);

// Minimum number of operations turning p into q, computed as the distance
// of q^{-1} ∘ p. Throws std::invalid_argument on length mismatch.
int pairwise_distance(const Permutation& p, const Permutation& q, Model m);
int pairwise_distance(DistanceEngine& engine, const Permutation& p, const Permutation& q, Model m);

// Every permutation of S_n within distance k of the identity, by k-level
// forward expansion from the identity. Throws BudgetExceeded when n exceeds
// budget.max_len or the ball grows beyond budget.max_states.
PermSet ball(std::size_t n, int k, Model m, const Budget& budget = {});

}  // namespace permball
