#include "senvr/weak_order.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "senvr/errors.h"

namespace senvr {

namespace {

constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();

}  // namespace

WeakOrder WeakOrder::FromClasses(std::vector<Class> classes,
                                 std::size_t universe_size) {
  std::vector<std::size_t> rank(universe_size, kUnassigned);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) {
      throw PartitionError("class " + std::to_string(c) + " is empty");
    }
    for (AlternativeId a : classes[c]) {
      if (a.index >= universe_size) {
        throw PartitionError("alternative " + std::to_string(a.index) +
                             " outside universe of size " +
                             std::to_string(universe_size));
      }
      if (rank[a.index] != kUnassigned) {
        throw PartitionError("alternative " + std::to_string(a.index) +
                             " appears in more than one place");
      }
      rank[a.index] = c;
    }
    std::sort(classes[c].begin(), classes[c].end());
  }
  for (std::size_t i = 0; i < universe_size; ++i) {
    if (rank[i] == kUnassigned) {
      throw PartitionError("alternative " + std::to_string(i) +
                           " is not ranked");
    }
  }
  return WeakOrder(std::move(classes), std::move(rank));
}

WeakOrder WeakOrder::FromClassLabels(std::span<const std::size_t> labels) {
  std::size_t class_count = 0;
  for (std::size_t label : labels) class_count = std::max(class_count, label + 1);
  std::vector<Class> classes(class_count);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    classes[labels[i]].push_back(AlternativeId(i));
  }
  return FromClasses(std::move(classes), labels.size());
}

Triple::Triple(AlternativeId a, AlternativeId b, AlternativeId c)
    : members_{a, b, c} {
  if (!(a < b && b < c)) {
    throw std::invalid_argument("triple members must be strictly ascending");
  }
}

std::vector<Triple> AllTriples(std::size_t alternative_count) {
  std::vector<Triple> triples;
  for (std::size_t a = 0; a < alternative_count; ++a) {
    for (std::size_t b = a + 1; b < alternative_count; ++b) {
      for (std::size_t c = b + 1; c < alternative_count; ++c) {
        triples.emplace_back(AlternativeId(a), AlternativeId(b),
                             AlternativeId(c));
      }
    }
  }
  return triples;
}

std::vector<AlternativeId> PredominanceSet(const WeakOrder& order,
                                           AlternativeId alt) {
  std::vector<AlternativeId> result;
  const std::size_t r = order.rank(alt);
  for (std::size_t c = 0; c < r; ++c) {
    const auto& cls = order.classes()[c];
    result.insert(result.end(), cls.begin(), cls.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<AlternativeId> IndifferenceSet(const WeakOrder& order,
                                           AlternativeId alt) {
  return order.classes()[order.rank(alt)];
}

WeakOrder Restrict(const WeakOrder& order, const Triple& triple) {
  std::vector<WeakOrder::Class> classes;
  for (const auto& cls : order.classes()) {
    WeakOrder::Class kept;
    for (std::size_t local = 0; local < 3; ++local) {
      if (std::find(cls.begin(), cls.end(), triple[local]) != cls.end()) {
        kept.push_back(AlternativeId(local));
      }
    }
    if (!kept.empty()) classes.push_back(std::move(kept));
  }
  return WeakOrder::FromClasses(std::move(classes), 3);
}

bool IsUnconcerned(const WeakOrder& order, const Triple& triple) {
  const std::size_t r = order.rank(triple[0]);
  return order.rank(triple[1]) == r && order.rank(triple[2]) == r;
}

}  // namespace senvr
