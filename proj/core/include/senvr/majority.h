#ifndef SENVR_MAJORITY_H_
#define SENVR_MAJORITY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "senvr/profile.h"
#include "senvr/weak_order.h"

namespace senvr {

// prefer(a, b) = number of voters ranking a strictly above b.
class PairwiseTally {
 public:
  PairwiseTally(std::size_t alternative_count, std::size_t voter_count)
      : size_(alternative_count),
        voter_count_(voter_count),
        counts_(alternative_count * alternative_count, 0) {}

  std::size_t size() const { return size_; }
  std::size_t voter_count() const { return voter_count_; }

  std::size_t prefer(AlternativeId a, AlternativeId b) const {
    return counts_.at(a.index * size_ + b.index);
  }
  void add(AlternativeId a, AlternativeId b, std::size_t count = 1) {
    counts_.at(a.index * size_ + b.index) += count;
  }

  friend bool operator==(const PairwiseTally&, const PairwiseTally&) = default;

 private:
  std::size_t size_;
  std::size_t voter_count_;
  std::vector<std::size_t> counts_;
};

// Complete social weak preference. weakly_prefers(a, b) holds iff a is at
// least as good as b socially.
class SocialRelation {
 public:
  explicit SocialRelation(std::size_t size)
      : size_(size), weak_(size * size, 0) {}

  std::size_t size() const { return size_; }

  bool WeaklyPrefers(AlternativeId a, AlternativeId b) const {
    return weak_.at(a.index * size_ + b.index) != 0;
  }
  bool StrictlyPrefers(AlternativeId a, AlternativeId b) const {
    return WeaklyPrefers(a, b) && !WeaklyPrefers(b, a);
  }
  bool Indifferent(AlternativeId a, AlternativeId b) const {
    return WeaklyPrefers(a, b) && WeaklyPrefers(b, a);
  }
  void set_weak(AlternativeId a, AlternativeId b, bool value) {
    weak_.at(a.index * size_ + b.index) = value ? 1 : 0;
  }

  friend bool operator==(const SocialRelation&,
                         const SocialRelation&) = default;

 private:
  std::size_t size_;
  std::vector<std::uint8_t> weak_;
};

struct TransitivityCheck {
  bool transitive = true;
  // First (a, b, c) in lexicographic order with aRb, bRc and not aRc.
  std::optional<std::array<AlternativeId, 3>> counterexample;
};

// Transitivity failure witness (a, b, c): aRb and bRc, yet c is strictly
// preferred to a.
struct CycleReport {
  std::array<AlternativeId, 3> witness;

  friend bool operator==(const CycleReport&, const CycleReport&) = default;
};

using SocialOutcome = std::variant<WeakOrder, CycleReport>;

PairwiseTally PairwiseTallies(const Profile& profile);

// Method of majority decision: a R b iff prefer(a,b) >= prefer(b,a).
SocialRelation MajorityRelation(const PairwiseTally& tally);

TransitivityCheck CheckTransitivity(const SocialRelation& relation);

// The social weak order when the relation is transitive, else the first
// transitivity counterexample.
SocialOutcome SocialOrdering(const SocialRelation& relation);

// The relation a weak order induces on its own universe.
SocialRelation InducedRelation(const WeakOrder& order);

}  // namespace senvr

#endif  // SENVR_MAJORITY_H_
