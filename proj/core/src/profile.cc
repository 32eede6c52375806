#include "senvr/profile.h"

#include <set>

#include "senvr/errors.h"

namespace senvr {

Profile::Profile(std::vector<std::string> alternative_names,
                 std::vector<WeakOrder> voters)
    : names_(std::move(alternative_names)), voters_(std::move(voters)) {
  if (names_.size() < 2) {
    throw ProfileError("a profile needs at least 2 alternatives");
  }
  if (voters_.empty()) throw ProfileError("a profile needs at least 1 voter");
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw ProfileError("duplicate alternative name '" + n + "'");
    }
  }
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    if (voters_[v].size() != names_.size()) {
      throw ProfileError("voter " + std::to_string(v + 1) + " ranks " +
                         std::to_string(voters_[v].size()) +
                         " alternatives, expected " +
                         std::to_string(names_.size()));
    }
  }
}

std::optional<AlternativeId> Profile::Find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return AlternativeId(i);
  }
  return std::nullopt;
}

}  // namespace senvr
