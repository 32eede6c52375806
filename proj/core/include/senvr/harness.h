#ifndef SENVR_HARNESS_H_
#define SENVR_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "senvr/profile.h"

namespace senvr {

enum class HarnessMode { kExhaustive, kRandom };

struct HarnessConfig {
  std::size_t alternatives = 3;
  std::size_t voters = 3;
  HarnessMode mode = HarnessMode::kExhaustive;
  std::uint64_t trials = 1;  // random mode only
  std::uint64_t seed = 0;    // random mode only
  unsigned threads = 0;      // 0 picks std::thread::hardware_concurrency()
};

inline constexpr std::size_t kMaxStoredViolations = 10;

// A profile that satisfies the value-restriction condition yet has an
// intransitive majority relation. `index` is the enumeration index
// (exhaustive) or trial number (random).
struct Violation {
  std::uint64_t index = 0;
  Profile profile;
};

struct HarnessReport {
  std::uint64_t profiles_tested = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t condition_held_count = 0;
  std::uint64_t condition_held_and_transitive_count = 0;
  std::uint64_t condition_failed_count = 0;
  std::uint64_t condition_failed_but_transitive_count = 0;
  std::uint64_t violation_count = 0;
  // The kMaxStoredViolations lowest-indexed violations, ascending.
  std::vector<Violation> violations;
};

// Throws RangeError when the configuration is outside the sweep guards.
void ValidateHarnessConfig(const HarnessConfig& config);

// Evaluates every profile of the configured sweep. Results do not depend on
// the thread count. Propagates InternalDisagreement from the checkers.
HarnessReport RunHarness(const HarnessConfig& config);

}  // namespace senvr

#endif  // SENVR_HARNESS_H_
