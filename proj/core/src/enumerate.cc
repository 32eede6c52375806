#include "senvr/enumerate.h"

#include <algorithm>
#include <numeric>

#include "senvr/errors.h"

namespace senvr {

namespace {

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  std::uint64_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Appends, in lexicographic order, every label vector over [0, k) that uses
// each label at least once.
void EmitSurjections(std::vector<std::size_t>& labels, std::size_t position,
                     std::size_t k, std::size_t used_count,
                     std::vector<std::size_t>& uses,
                     std::vector<WeakOrder>& out) {
  const std::size_t remaining = labels.size() - position;
  if (remaining == 0) {
    if (used_count == k) out.push_back(WeakOrder::FromClassLabels(labels));
    return;
  }
  if (k - used_count > remaining) return;
  for (std::size_t label = 0; label < k; ++label) {
    labels[position] = label;
    const bool fresh = uses[label]++ == 0;
    EmitSurjections(labels, position + 1, k, used_count + (fresh ? 1 : 0),
                    uses, out);
    --uses[label];
  }
}

}  // namespace

std::uint64_t CountWeakOrders(std::size_t m) {
  std::vector<std::uint64_t> fubini(m + 1, 0);
  fubini[0] = 1;
  for (std::size_t s = 1; s <= m; ++s) {
    for (std::size_t k = 1; k <= s; ++k) {
      fubini[s] += Binomial(s, k) * fubini[s - k];
    }
  }
  return fubini[m];
}

std::vector<WeakOrder> EnumerateWeakOrders(std::size_t m) {
  if (m < 1 || m > kMaxEnumeratedAlternatives) {
    throw RangeError("weak-order enumeration supports 1 to " +
                     std::to_string(kMaxEnumeratedAlternatives) +
                     " alternatives, got " + std::to_string(m));
  }
  std::vector<WeakOrder> orders;
  std::vector<std::size_t> labels(m, 0);
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> uses(k, 0);
    EmitSurjections(labels, 0, k, 0, uses, orders);
  }
  return orders;
}

std::vector<std::string> DefaultNames(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

ProfileSpace::ProfileSpace(std::size_t m, std::size_t n)
    : voter_count_(n), size_(1) {
  if (m < 2 || m > kMaxEnumeratedAlternatives) {
    throw RangeError("exhaustive sweeps support 2 to " +
                     std::to_string(kMaxEnumeratedAlternatives) +
                     " alternatives, got " + std::to_string(m));
  }
  if (n == 0) throw RangeError("exhaustive sweeps need at least 1 voter");
  orders_ = EnumerateWeakOrders(m);
  for (std::size_t v = 0; v < n; ++v) {
    if (size_ > kMaxEnumeratedProfiles / orders_.size()) {
      throw RangeError(std::to_string(orders_.size()) + "^" +
                       std::to_string(n) + " profiles exceed the limit of " +
                       std::to_string(kMaxEnumeratedProfiles));
    }
    size_ *= orders_.size();
  }
  names_ = DefaultNames(m);
}

Profile ProfileSpace::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("profile index out of range");
  std::vector<WeakOrder> voters(voter_count_, orders_.front());
  for (std::size_t v = voter_count_; v-- > 0;) {
    voters[v] = orders_[index % orders_.size()];
    index /= orders_.size();
  }
  return Profile(names_, std::move(voters));
}

WeakOrder RandomWeakOrder(std::size_t m, std::mt19937_64& rng) {
  // Pick the size k of the top class with probability C(s,k) F(s-k) / F(s),
  // then a uniform k-subset of what is left, and recurse.
  std::vector<std::size_t> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> labels(m, 0);
  std::size_t label = 0;
  while (!pool.empty()) {
    const std::size_t s = pool.size();
    std::uniform_int_distribution<std::uint64_t> pick(0, CountWeakOrders(s) - 1);
    std::uint64_t r = pick(rng);
    std::size_t k = 1;
    for (;; ++k) {
      const std::uint64_t weight = Binomial(s, k) * CountWeakOrders(s - k);
      if (r < weight) break;
      r -= weight;
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> swap_with(i, s - 1);
      std::swap(pool[i], pool[swap_with(rng)]);
      labels[pool[i]] = label;
    }
    pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    ++label;
  }
  return WeakOrder::FromClassLabels(labels);
}

Profile RandomProfile(std::size_t m, std::size_t n, std::uint64_t seed,
                      std::uint64_t trial) {
  if (m < 2 || m > kMaxRandomAlternatives) {
    throw RangeError("random profiles support 2 to " +
                     std::to_string(kMaxRandomAlternatives) +
                     " alternatives, got " + std::to_string(m));
  }
  if (n == 0) throw RangeError("random profiles need at least 1 voter");
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<WeakOrder> voters;
  voters.reserve(n);
  for (std::size_t v = 0; v < n; ++v) voters.push_back(RandomWeakOrder(m, rng));
  return Profile(DefaultNames(m), std::move(voters));
}

}  // namespace senvr
