#include "cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <limits>
#include <ostream>

#include <CLI11.hpp>

#include "cli/envelope.hpp"
#include "cli/golden.hpp"
#include "cli/verify.hpp"
#include "permball/ball_analysis.hpp"
#include "permball/basis.hpp"
#include "permball/distance_engine.hpp"
#include "permball/enumeration.hpp"
#include "permball/errors.hpp"
#include "permball/text_format.hpp"

namespace permball::cli {

namespace {

Json elements_json(const PermSet& set) {
  Json out = Json::array();
  for (const auto& text : format_all(set)) out.push_back(text);
  return out;
}

Json big_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(value.str());
}

std::size_t env_max_len(std::size_t fallback) {
  const char* raw = std::getenv("PERMBALL_MAX_LEN");
  if (raw == nullptr || *raw == '\0') return fallback;
  try {
    return static_cast<std::size_t>(std::stoul(raw));
  } catch (const std::exception&) {
    return fallback;
  }
}

struct Options {
  std::string format = "text";
  Budget budget;
  std::string model = "td";
  std::string perm;
  int k = 1;
  std::size_t n = 0;
  std::string method = "direct";
  std::string basis_method = "filter";
  bool count_only = false;
  bool probe = false;
  bool cross_check = false;
  std::size_t max_n = 6;
  std::string golden = PERMBALL_DEFAULT_GOLDEN;
};

void add_model(CLI::App* sub, Options& opt) {
  sub->add_option("-m,--model", opt.model, "Rearrangement model")
      ->check(CLI::IsMember({"td", "ptd"}))
      ->capture_default_str();
}

void add_set_listing(Envelope& env, const PermSet& set, bool count_only) {
  if (!count_only) env.result["elements"] = elements_json(set);
  env.result["count"] = set.size();
}

int execute(const std::string& command, const Options& opt, Envelope& env) {
  DistanceEngine engine(opt.budget);
  env.command = command;
  env.parameters["max_len"] = opt.budget.max_len;
  env.parameters["max_states"] = opt.budget.max_states;

  if (command == "distance") {
    const auto m = parse_model(opt.model);
    const auto p = parse_permutation(opt.perm);
    env.model = opt.model;
    env.parameters["permutation"] = opt.perm;
    env.result["permutation"] = format_permutation(p);
    env.result["model"] = opt.model;
    env.result["distance"] = engine.distance(p, m);
    return kSuccess;
  }
  if (command == "neighbors") {
    const auto m = parse_model(opt.model);
    const auto p = parse_permutation(opt.perm);
    env.model = opt.model;
    env.parameters["permutation"] = opt.perm;
    env.result["permutation"] = format_permutation(p);
    env.result["model"] = opt.model;
    add_set_listing(env, neighbors(p, m), opt.count_only);
    return kSuccess;
  }
  if (command == "ball") {
    const auto m = parse_model(opt.model);
    env.model = opt.model;
    env.parameters["n"] = opt.n;
    env.parameters["k"] = opt.k;
    env.result["n"] = opt.n;
    env.result["k"] = opt.k;
    env.result["model"] = opt.model;
    add_set_listing(env, ball(opt.n, opt.k, m, opt.budget), opt.count_only);
    return kSuccess;
  }
  if (command == "count-irreducible") {
    env.parameters["n"] = opt.n;
    env.result["length"] = opt.n;
    env.result["count"] = big_json(opt.n == 0 ? BigInt(1) : plus_irreducible_count(opt.n - 1));
    if (opt.cross_check) {
      env.result["enumerated"] = enumerate_plus_irreducible(opt.n, opt.budget).size();
    }
    return kSuccess;
  }
  if (command == "genset") {
    const auto m = parse_model(opt.model);
    const auto method = parse_method(opt.method);
    env.model = opt.model;
    env.parameters["k"] = opt.k;
    env.parameters["method"] = opt.method;
    const auto report = method == GenerationMethod::Direct
                            ? generating_set_direct(opt.k, m, engine)
                            : generating_set_constructive(opt.k, m, opt.budget);
    env.result["k"] = report.k;
    env.result["model"] = opt.model;
    env.result["method"] = std::string(method_name(report.method));
    env.result["element_length"] = report.element_length;
    add_set_listing(env, report.elements, opt.count_only);
    return kSuccess;
  }
  if (command == "basis") {
    const auto m = parse_model(opt.model);
    env.model = opt.model;
    env.parameters["k"] = opt.k;
    env.parameters["method"] = opt.basis_method;
    env.parameters["probe_extra_length"] = opt.probe;
    const auto report = opt.basis_method == "descent"
                            ? basis_via_poset_descent(opt.k, m, opt.budget)
                            : basis(opt.k, m, opt.probe, engine);
    env.result["k"] = report.k;
    env.result["model"] = opt.model;
    env.result["method"] = opt.basis_method;
    env.result["length_bound"] = report.length_bound_used;
    add_set_listing(env, report.elements, opt.count_only);
    if (report.probe_result) {
      Json probe;
      probe["length"] = report.probe_result->length;
      probe["found"] = report.probe_result->found.size();
      probe["elements"] = elements_json(report.probe_result->found);
      env.result["probe"] = probe;
    }
    return kSuccess;
  }
  if (command == "verify") {
    const auto m = parse_model(opt.model);
    env.model = opt.model;
    env.parameters["k"] = opt.k;
    env.parameters["max_n"] = opt.max_n;
    env.parameters["golden"] = opt.golden;
    Golden golden = Golden::load(opt.golden);
    const auto results = run_verification({m, opt.k, opt.max_n}, golden, engine);
    Json checks = Json::array();
    std::size_t counts[3] = {0, 0, 0};
    for (const auto& r : results) {
      ++counts[static_cast<int>(r.status)];
      checks.push_back({{"status", std::string(status_name(r.status))},
                        {"name", r.name},
                        {"detail", r.detail}});
    }
    env.result["model"] = opt.model;
    env.result["k"] = opt.k;
    env.result["max_n"] = opt.max_n;
    env.result["checks"] = checks;
    env.result["passed"] = counts[0];
    env.result["failed"] = counts[1];
    env.result["skipped"] = counts[2];
    return all_passed(results) ? kSuccess : kVerificationFailed;
  }
  throw std::logic_error("unhandled command " + command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.budget.max_len = env_max_len(opt.budget.max_len);

  CLI::App app{"Exact block and prefix transposition distances, balls, generating sets and bases",
               "permball"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-len", opt.budget.max_len, "Longest permutation any sweep may touch")
      ->capture_default_str();
  app.add_option("--max-states", opt.budget.max_states,
                 "Most permutations a single search or sweep may hold")
      ->capture_default_str();

  auto* distance_cmd = app.add_subcommand("distance", "Exact distance to the identity");
  add_model(distance_cmd, opt);
  distance_cmd->add_option("permutation", opt.perm)->required();

  auto* neighbors_cmd = app.add_subcommand("neighbors", "Results of one operation");
  add_model(neighbors_cmd, opt);
  neighbors_cmd->add_option("permutation", opt.perm)->required();
  neighbors_cmd->add_flag("--count-only", opt.count_only);

  auto* ball_cmd = app.add_subcommand("ball", "Permutations of length n within distance k");
  add_model(ball_cmd, opt);
  ball_cmd->add_option("-n", opt.n)->required();
  ball_cmd->add_option("-k", opt.k)->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_flag("--count-only", opt.count_only);

  auto* count_cmd =
      app.add_subcommand("count-irreducible", "Number of plus irreducible permutations of length n");
  count_cmd->add_option("-n", opt.n)->required();
  count_cmd->add_flag("--cross-check", opt.cross_check, "Also enumerate them");

  auto* genset_cmd = app.add_subcommand("genset", "Generating set of B_k");
  add_model(genset_cmd, opt);
  genset_cmd->add_option("-k", opt.k)->required()->check(CLI::PositiveNumber);
  genset_cmd->add_option("--method", opt.method)
      ->check(CLI::IsMember({"direct", "constructive"}))
      ->capture_default_str();
  genset_cmd->add_flag("--count-only", opt.count_only);

  auto* basis_cmd = app.add_subcommand("basis", "Basis of B_k");
  add_model(basis_cmd, opt);
  basis_cmd->add_option("-k", opt.k)->required()->check(CLI::PositiveNumber);
  basis_cmd->add_option("--method", opt.basis_method)
      ->check(CLI::IsMember({"filter", "descent"}))
      ->capture_default_str();
  basis_cmd->add_flag("--probe-extra-length", opt.probe,
                      "Also search one length past the bound (filter method)");
  basis_cmd->add_flag("--count-only", opt.count_only);

  auto* verify_cmd = app.add_subcommand("verify", "Run every invariant and golden check");
  add_model(verify_cmd, opt);
  verify_cmd->add_option("-k", opt.k)->check(CLI::PositiveNumber)->capture_default_str();
  verify_cmd->add_option("--max-n", opt.max_n)->capture_default_str();
  verify_cmd->add_option("--golden", opt.golden, "Golden values file")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();

  Envelope env;
  int code = kSuccess;
  const auto start = std::chrono::steady_clock::now();
  try {
    code = execute(command, opt, env);
  } catch (const BudgetExceeded& e) {
    err << "permball: budget refused: " << e.what() << '\n';
    return kBudgetRefused;
  } catch (const std::invalid_argument& e) {
    err << "permball: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "permball: " << e.what() << '\n';
    return kUsageError;
  }
  env.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.format == "json") {
    out << render_json(env);
  } else {
    out << render_text(env);
    err << "elapsed: " << env.elapsed_ms << " ms\n";
  }
  return code;
}

}  // namespace permball::cli
