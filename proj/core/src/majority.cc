#include "senvr/majority.h"

#include <algorithm>
#include <functional>
#include <map>

namespace senvr {

PairwiseTally PairwiseTallies(const Profile& profile) {
  const std::size_t m = profile.alternative_count();
  PairwiseTally tally(m, profile.voter_count());
  for (const WeakOrder& order : profile.voters()) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (order.Prefers(AlternativeId(a), AlternativeId(b))) {
          tally.add(AlternativeId(a), AlternativeId(b));
        }
      }
    }
  }
  return tally;
}

SocialRelation MajorityRelation(const PairwiseTally& tally) {
  SocialRelation relation(tally.size());
  for (std::size_t a = 0; a < tally.size(); ++a) {
    for (std::size_t b = 0; b < tally.size(); ++b) {
      const AlternativeId x(a), y(b);
      relation.set_weak(x, y, tally.prefer(x, y) >= tally.prefer(y, x));
    }
  }
  return relation;
}

TransitivityCheck CheckTransitivity(const SocialRelation& relation) {
  const std::size_t m = relation.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!relation.WeaklyPrefers(AlternativeId(a), AlternativeId(b))) continue;
      for (std::size_t c = 0; c < m; ++c) {
        if (relation.WeaklyPrefers(AlternativeId(b), AlternativeId(c)) &&
            !relation.WeaklyPrefers(AlternativeId(a), AlternativeId(c))) {
          return TransitivityCheck{
              false, std::array{AlternativeId(a), AlternativeId(b),
                                AlternativeId(c)}};
        }
      }
    }
  }
  return TransitivityCheck{};
}

SocialOutcome SocialOrdering(const SocialRelation& relation) {
  const TransitivityCheck check = CheckTransitivity(relation);
  if (!check.transitive) return CycleReport{*check.counterexample};

  // For a complete transitive relation, the number of alternatives an
  // alternative weakly beats is constant on indifference classes and
  // strictly larger for better classes.
  std::map<std::size_t, WeakOrder::Class, std::greater<>> by_score;
  for (std::size_t a = 0; a < relation.size(); ++a) {
    std::size_t score = 0;
    for (std::size_t b = 0; b < relation.size(); ++b) {
      if (relation.WeaklyPrefers(AlternativeId(a), AlternativeId(b))) ++score;
    }
    by_score[score].push_back(AlternativeId(a));
  }
  std::vector<WeakOrder::Class> classes;
  for (auto& [score, cls] : by_score) classes.push_back(std::move(cls));
  return WeakOrder::FromClasses(std::move(classes), relation.size());
}

SocialRelation InducedRelation(const WeakOrder& order) {
  SocialRelation relation(order.size());
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      relation.set_weak(AlternativeId(a), AlternativeId(b),
                        order.WeaklyPrefers(AlternativeId(a), AlternativeId(b)));
    }
  }
  return relation;
}

}  // namespace senvr
