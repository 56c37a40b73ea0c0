#include "cli/envelope.hpp"

#include <sstream>

namespace permball::cli {

namespace {

std::string scalar(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void render_field(std::ostringstream& out, const std::string& key, const Json& value) {
  if (value.is_object()) {
    for (const auto& [sub, inner] : value.items()) render_field(out, key + "." + sub, inner);
    return;
  }
  if (!value.is_array()) {
    out << key << ": " << scalar(value) << '\n';
    return;
  }
  const bool rows = !value.empty() && value.front().is_object();
  if (!rows) {
    out << key << ':';
    for (const auto& item : value) out << ' ' << scalar(item);
    out << '\n';
    return;
  }
  out << key << ":\n";
  for (const auto& row : value) {
    out << ' ';
    for (const auto& [col, cell] : row.items()) out << ' ' << scalar(cell);
    out << '\n';
  }
}

}  // namespace

std::string render_json(const Envelope& envelope) {
  Json doc;
  doc["command"] = envelope.command;
  doc["model"] = envelope.model.empty() ? Json(nullptr) : Json(envelope.model);
  doc["parameters"] = envelope.parameters;
  doc["result"] = envelope.result;
  doc["elapsed_ms"] = envelope.elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string render_text(const Envelope& envelope) {
  std::ostringstream out;
  for (const auto& [key, value] : envelope.result.items()) render_field(out, key, value);
  return out.str();
}

}  // namespace permball::cli
