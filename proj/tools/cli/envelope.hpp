#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace permball::cli {

using Json = nlohmann::ordered_json;

// Common output wrapper for every subcommand. Text and JSON renderings carry
// the same result payload.
struct Envelope {
  std::string command;
  std::string model;  // empty when the command has no model
  Json parameters = Json::object();
  Json result = Json::object();
  double elapsed_ms = 0.0;
};

std::string render_json(const Envelope& envelope);

// One "key: value" line per result field. Arrays of scalars are joined by
// spaces; arrays of objects print one line per object.
std::string render_text(const Envelope& envelope);

}  // namespace permball::cli
