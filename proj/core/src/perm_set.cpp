#include "permball/perm_set.hpp"

#include <algorithm>
#include <iterator>

namespace permball {

PermSet::PermSet(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

PermSet::PermSet(std::initializer_list<Permutation> elements)
    : PermSet(std::vector<Permutation>(elements)) {}

bool PermSet::insert(const Permutation& p) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it != elements_.end() && *it == p) return false;
  elements_.insert(it, p);
  return true;
}

void PermSet::merge(const PermSet& other) {
  std::vector<Permutation> out;
  out.reserve(elements_.size() + other.elements_.size());
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(out));
  elements_ = std::move(out);
}

bool PermSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermSet difference(const PermSet& a, const PermSet& b) {
  std::vector<Permutation> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PermSet(std::move(out));
}

}  // namespace permball
