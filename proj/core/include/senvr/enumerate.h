#ifndef SENVR_ENUMERATE_H_
#define SENVR_ENUMERATE_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "senvr/profile.h"
#include "senvr/weak_order.h"

namespace senvr {

inline constexpr std::size_t kMaxEnumeratedAlternatives = 5;
inline constexpr std::uint64_t kMaxEnumeratedProfiles = 10'000'000;
inline constexpr std::size_t kMaxRandomAlternatives = 8;

// Number of weak orders on m labelled alternatives (ordered Bell numbers).
std::uint64_t CountWeakOrders(std::size_t m);

// Every weak order on m alternatives exactly once, sorted by number of
// classes and then lexicographically by the class-label vector.
// Throws RangeError unless 1 <= m <= kMaxEnumeratedAlternatives.
std::vector<WeakOrder> EnumerateWeakOrders(std::size_t m);

// Default alternative names x1, ..., xm.
std::vector<std::string> DefaultNames(std::size_t m);

// All n-tuples of weak orders on m alternatives, indexable in lexicographic
// order over EnumerateWeakOrders(m) with voter 1 most significant.
class ProfileSpace {
 public:
  // Throws RangeError when m is outside [2, kMaxEnumeratedAlternatives],
  // n is 0, or the space exceeds kMaxEnumeratedProfiles.
  ProfileSpace(std::size_t m, std::size_t n);

  std::uint64_t size() const { return size_; }
  std::size_t alternative_count() const { return names_.size(); }
  std::size_t voter_count() const { return voter_count_; }
  const std::vector<WeakOrder>& orders() const { return orders_; }

  Profile at(std::uint64_t index) const;

 private:
  std::vector<std::string> names_;
  std::size_t voter_count_;
  std::vector<WeakOrder> orders_;
  std::uint64_t size_;
};

// Uniform draw over all weak orders on m alternatives.
WeakOrder RandomWeakOrder(std::size_t m, std::mt19937_64& rng);

// n voters drawn independently and uniformly over weak orders. A pure
// function of (seed, trial). Throws RangeError unless
// 2 <= m <= kMaxRandomAlternatives and n >= 1.
Profile RandomProfile(std::size_t m, std::size_t n, std::uint64_t seed,
                      std::uint64_t trial);

}  // namespace senvr

#endif  // SENVR_ENUMERATE_H_
