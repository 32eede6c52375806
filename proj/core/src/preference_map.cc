#include "senvr/preference_map.h"

namespace senvr {

PreferenceMap BuildPreferenceMap(const WeakOrder& order) {
  PreferenceMap map;
  map.rows.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const AlternativeId alt(i);
    const std::size_t above = PredominanceSet(order, alt).size();
    const std::size_t tied = IndifferenceSet(order, alt).size();
    map.rows[i] = PositionInterval{above + 1, above + tied};
  }
  return map;
}

MembershipMatrix BuildMembershipMatrix(const PreferenceMap& map) {
  MembershipMatrix matrix(map.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = 0; j < map.size(); ++j) {
      matrix.set(i, j, map.rows[i].contains(j + 1) ? 1 : 0);
    }
  }
  return matrix;
}

}  // namespace senvr
