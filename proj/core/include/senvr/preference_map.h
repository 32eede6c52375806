#ifndef SENVR_PREFERENCE_MAP_H_
#define SENVR_PREFERENCE_MAP_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "senvr/weak_order.h"

namespace senvr {

// The 1-based ranking positions {first, ..., last} an alternative may
// occupy. Ties share positions, so a class of size k spans k positions.
struct PositionInterval {
  std::size_t first = 1;
  std::size_t last = 1;

  std::size_t size() const { return last - first + 1; }
  bool contains(std::size_t position) const {
    return first <= position && position <= last;
  }

  friend bool operator==(PositionInterval, PositionInterval) = default;
};

// One row per alternative, in alternative id order. Row i is
// {|predominance_i| + 1, ..., |predominance_i| + |indifference_i|}.
struct PreferenceMap {
  std::vector<PositionInterval> rows;

  std::size_t size() const { return rows.size(); }

  friend bool operator==(const PreferenceMap&, const PreferenceMap&) = default;
};

// Square 0-1 matrix; rows are alternatives, column j stands for ranking
// position j+1.
class MembershipMatrix {
 public:
  explicit MembershipMatrix(std::size_t size)
      : size_(size), entries_(size * size, 0) {}

  std::size_t size() const { return size_; }
  std::uint8_t at(std::size_t row, std::size_t column) const {
    return entries_.at(row * size_ + column);
  }
  void set(std::size_t row, std::size_t column, std::uint8_t value) {
    entries_.at(row * size_ + column) = value;
  }

  friend bool operator==(const MembershipMatrix&,
                         const MembershipMatrix&) = default;

 private:
  std::size_t size_;
  std::vector<std::uint8_t> entries_;
};

PreferenceMap BuildPreferenceMap(const WeakOrder& order);

MembershipMatrix BuildMembershipMatrix(const PreferenceMap& map);

}  // namespace senvr

#endif  // SENVR_PREFERENCE_MAP_H_
