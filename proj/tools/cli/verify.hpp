#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cli/golden.hpp"
#include "permball/distance_engine.hpp"
#include "permball/models.hpp"

namespace permball::cli {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyRequest {
  Model model = Model::BlockTransposition;
  int k = 1;
  std::size_t max_n = 6;
};

// Runs every invariant of the library for radii 1..k under one model, plus
// the golden values. Checks whose inputs exceed the engine's budget come
// back Skipped.
std::vector<CheckResult> run_verification(const VerifyRequest& request, const Golden& golden,
                                          DistanceEngine& engine);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace permball::cli
