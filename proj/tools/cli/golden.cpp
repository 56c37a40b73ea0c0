#include "cli/golden.hpp"

#include <fstream>
#include <stdexcept>

#include "permball/text_format.hpp"

namespace permball::cli {

Golden Golden::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file '" + path + "'");
  try {
    return Golden(Json::parse(in));
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("golden file '" + path + "': " + e.what());
  }
}

std::optional<PermSet> Golden::lookup(const char* section, Model m, int k) const {
  const auto model = std::string(model_name(m));
  const auto key = std::to_string(k);
  if (!data_.contains(section) || !data_[section].contains(model) ||
      !data_[section][model].contains(key)) {
    return std::nullopt;
  }
  PermSet out;
  for (const auto& text : data_[section][model][key]) {
    out.insert(parse_permutation(text.get<std::string>()));
  }
  return out;
}

std::optional<PermSet> Golden::generating_set(Model m, int k) const {
  return lookup("generating_sets", m, k);
}

std::optional<PermSet> Golden::basis(Model m, int k) const { return lookup("bases", m, k); }

}  // namespace permball::cli
