#ifndef SENVR_WEAK_ORDER_H_
#define SENVR_WEAK_ORDER_H_

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace senvr {

// 0-based index into a profile's alternative name table.
struct AlternativeId {
  std::size_t index = 0;

  constexpr AlternativeId() = default;
  constexpr explicit AlternativeId(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(AlternativeId, AlternativeId) = default;
};

// A complete, reflexive, transitive preference over {0, ..., size()-1},
// stored as an ordered partition into indifference classes, best first.
// Members of each class are kept in ascending id order so that equal
// relations compare equal.
class WeakOrder {
 public:
  using Class = std::vector<AlternativeId>;

  // Throws PartitionError unless `classes` is an ordered partition of
  // {0, ..., universe_size-1} with no empty class.
  static WeakOrder FromClasses(std::vector<Class> classes,
                               std::size_t universe_size);

  // labels[i] is the 0-based class of alternative i. The labels must use
  // every value in [0, max(labels)]. Throws PartitionError otherwise.
  static WeakOrder FromClassLabels(std::span<const std::size_t> labels);

  std::size_t size() const { return rank_.size(); }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<Class>& classes() const { return classes_; }

  // 0-based index of the class holding `a`.
  std::size_t rank(AlternativeId a) const { return rank_.at(a.index); }

  // a strictly above b.
  bool Prefers(AlternativeId a, AlternativeId b) const {
    return rank(a) < rank(b);
  }
  // a at least as good as b.
  bool WeaklyPrefers(AlternativeId a, AlternativeId b) const {
    return rank(a) <= rank(b);
  }
  bool Indifferent(AlternativeId a, AlternativeId b) const {
    return rank(a) == rank(b);
  }

  friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

 private:
  WeakOrder(std::vector<Class> classes, std::vector<std::size_t> rank)
      : classes_(std::move(classes)), rank_(std::move(rank)) {}

  std::vector<Class> classes_;
  std::vector<std::size_t> rank_;
};

// Three distinct alternatives in strictly ascending id order, so each
// unordered triple has exactly one representation.
class Triple {
 public:
  // Throws std::invalid_argument unless a < b < c.
  Triple(AlternativeId a, AlternativeId b, AlternativeId c);

  const std::array<AlternativeId, 3>& members() const { return members_; }
  AlternativeId operator[](std::size_t i) const { return members_.at(i); }

  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  std::array<AlternativeId, 3> members_;
};

// All C(m,3) triples of {0, ..., m-1} in lexicographic order.
std::vector<Triple> AllTriples(std::size_t alternative_count);

// Alternatives strictly preferred to `alt`.
std::vector<AlternativeId> PredominanceSet(const WeakOrder& order,
                                           AlternativeId alt);

// The indifference class of `alt`, including `alt` itself.
std::vector<AlternativeId> IndifferenceSet(const WeakOrder& order,
                                           AlternativeId alt);

// Induced order on the three members of `triple`, relabelled to local ids
// 0..2 in triple order. Class order is kept and emptied classes dropped.
WeakOrder Restrict(const WeakOrder& order, const Triple& triple);

// True iff the voter is indifferent among all three members.
bool IsUnconcerned(const WeakOrder& order, const Triple& triple);

}  // namespace senvr

#endif  // SENVR_WEAK_ORDER_H_
