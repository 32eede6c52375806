#include "senvr/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "senvr/enumerate.h"
#include "senvr/errors.h"
#include "senvr/majority.h"
#include "senvr/sen_check.h"

namespace senvr {

namespace {

constexpr std::uint64_t kChunkSize = 256;

struct Failure {
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::exception_ptr error;
};

void Evaluate(std::uint64_t index, const Profile& profile,
              HarnessReport& report) {
  const SenVerdict verdict = SenCondition(profile);
  const bool transitive =
      CheckTransitivity(MajorityRelation(PairwiseTallies(profile))).transitive;
  ++report.profiles_tested;
  report.triples_checked += verdict.per_triple.size();
  if (verdict.condition_holds) {
    ++report.condition_held_count;
    if (transitive) {
      ++report.condition_held_and_transitive_count;
    } else {
      ++report.violation_count;
      if (report.violations.size() < kMaxStoredViolations) {
        report.violations.push_back(Violation{index, profile});
      }
    }
  } else {
    ++report.condition_failed_count;
    if (transitive) ++report.condition_failed_but_transitive_count;
  }
}

void Merge(HarnessReport& into, HarnessReport&& part) {
  into.profiles_tested += part.profiles_tested;
  into.triples_checked += part.triples_checked;
  into.condition_held_count += part.condition_held_count;
  into.condition_held_and_transitive_count +=
      part.condition_held_and_transitive_count;
  into.condition_failed_count += part.condition_failed_count;
  into.condition_failed_but_transitive_count +=
      part.condition_failed_but_transitive_count;
  into.violation_count += part.violation_count;
  for (auto& v : part.violations) into.violations.push_back(std::move(v));
}

}  // namespace

void ValidateHarnessConfig(const HarnessConfig& config) {
  if (config.alternatives < 3) {
    throw RangeError("value restriction needs at least 3 alternatives, got " +
                     std::to_string(config.alternatives));
  }
  if (config.voters == 0) throw RangeError("need at least 1 voter");
  if (config.mode == HarnessMode::kExhaustive) {
    ProfileSpace space(config.alternatives, config.voters);
    (void)space;
  } else {
    if (config.alternatives > kMaxRandomAlternatives) {
      throw RangeError("random sweeps support at most " +
                       std::to_string(kMaxRandomAlternatives) +
                       " alternatives, got " +
                       std::to_string(config.alternatives));
    }
    if (config.trials == 0) throw RangeError("random sweeps need trials >= 1");
  }
}

HarnessReport RunHarness(const HarnessConfig& config) {
  ValidateHarnessConfig(config);

  std::optional<ProfileSpace> space;
  std::uint64_t total = config.trials;
  if (config.mode == HarnessMode::kExhaustive) {
    space.emplace(config.alternatives, config.voters);
    total = space->size();
  }
  const auto profile_at = [&](std::uint64_t index) {
    return space ? space->at(index)
                 : RandomProfile(config.alternatives, config.voters,
                                 config.seed, index);
  };

  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<bool> stop{false};
  std::mutex mutex;
  HarnessReport report;
  Failure failure;

  const auto worker = [&] {
    HarnessReport local;
    Failure local_failure;
    while (!stop.load(std::memory_order_relaxed)) {
      const std::uint64_t chunk = next_chunk.fetch_add(1);
      if (chunk >= chunks) break;
      const std::uint64_t end = std::min(total, (chunk + 1) * kChunkSize);
      for (std::uint64_t i = chunk * kChunkSize; i < end; ++i) {
        try {
          Evaluate(i, profile_at(i), local);
        } catch (...) {
          local_failure = Failure{i, std::current_exception()};
          stop = true;
          break;
        }
      }
      if (local_failure.error) break;
    }
    std::lock_guard lock(mutex);
    Merge(report, std::move(local));
    if (local_failure.error && local_failure.index < failure.index) {
      failure = local_failure;
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure.error) std::rethrow_exception(failure.error);

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.index < b.index;
            });
  if (report.violations.size() > kMaxStoredViolations) {
    report.violations.erase(
        report.violations.begin() + kMaxStoredViolations,
        report.violations.end());
  }
  return report;
}

}  // namespace senvr
