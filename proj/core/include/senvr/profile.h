#ifndef SENVR_PROFILE_H_
#define SENVR_PROFILE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "senvr/weak_order.h"

namespace senvr {

// Named alternatives plus one weak order per voter. Requires at least two
// alternatives and one voter; throws ProfileError otherwise.
class Profile {
 public:
  Profile(std::vector<std::string> alternative_names,
          std::vector<WeakOrder> voters);

  std::size_t alternative_count() const { return names_.size(); }
  std::size_t voter_count() const { return voters_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(AlternativeId a) const { return names_.at(a.index); }
  const std::vector<WeakOrder>& voters() const { return voters_; }
  const WeakOrder& voter(std::size_t i) const { return voters_.at(i); }

  std::optional<AlternativeId> Find(std::string_view name) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<WeakOrder> voters_;
};

}  // namespace senvr

#endif  // SENVR_PROFILE_H_
