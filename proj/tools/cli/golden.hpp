#pragma once

#include <optional>
#include <string>

#include "cli/envelope.hpp"
#include "permball/models.hpp"
#include "permball/perm_set.hpp"

namespace permball::cli {

// Expected values consumed by `verify`.
class Golden {
 public:
  explicit Golden(Json data) : data_(std::move(data)) {}

  // Throws std::runtime_error when the file is missing or not valid JSON.
  static Golden load(const std::string& path);

  const Json& data() const { return data_; }

  std::optional<PermSet> generating_set(Model m, int k) const;
  std::optional<PermSet> basis(Model m, int k) const;

 private:
  std::optional<PermSet> lookup(const char* section, Model m, int k) const;

  Json data_;
};

}  // namespace permball::cli
