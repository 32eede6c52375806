#ifndef SENVR_SEN_CHECK_H_
#define SENVR_SEN_CHECK_H_

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "senvr/profile.h"
#include "senvr/weak_order.h"

namespace senvr {

// Qualitative value of an alternative inside a triple. Declaration order
// matches ranking positions 1, 2, 3.
enum class ValueLabel { kBest, kMedium, kWorst };

inline constexpr std::array<ValueLabel, 3> kAllValueLabels = {
    ValueLabel::kBest, ValueLabel::kMedium, ValueLabel::kWorst};

std::string_view ToString(ValueLabel value);

using ValueSet = std::set<ValueLabel>;

// Rows and columns below are local to a triple: row r is triple member r,
// column c is ranking position c+1.
struct Cell {
  std::size_t row = 0;
  std::size_t column = 0;

  friend bool operator==(Cell, Cell) = default;
};

using SumMatrix = std::array<std::array<std::size_t, 3>, 3>;

// Union-cardinality form: some member's positions, pooled over the
// concerned voters, miss at least one of {1,2,3}.
struct UnionCheck {
  bool holds = false;
  std::optional<std::size_t> witness_row;
  std::array<std::set<std::size_t>, 3> unions;
};

// Membership-sum form: the summed 0-1 matrices of the concerned voters have
// a zero entry.
struct SumCheck {
  bool holds = false;
  std::optional<Cell> witness_cell;
  SumMatrix sums{};
};

struct ValueWitness {
  std::size_t row = 0;
  ValueLabel value = ValueLabel::kBest;

  friend bool operator==(ValueWitness, ValueWitness) = default;
};

// Qualitative form: some (member, value) pair never occurs among the
// concerned voters.
struct OracleCheck {
  bool holds = false;
  std::optional<ValueWitness> witness;
};

struct TripleReport {
  Triple triple;
  std::vector<std::size_t> concerned;  // 0-based voter indices, ascending
  bool parity_ok = false;
  UnionCheck inequality;
  SumCheck equation;
  OracleCheck oracle;

  std::size_t concerned_count() const { return concerned.size(); }
  bool value_restricted() const { return inequality.holds; }
};

struct SenVerdict {
  std::vector<TripleReport> per_triple;
  bool condition_holds = false;
};

// Voters not indifferent among all three members of `triple`.
std::vector<std::size_t> ConcernedSet(const Profile& profile,
                                      const Triple& triple);

UnionCheck CheckUnionInequality(const Profile& profile, const Triple& triple);

SumCheck CheckMembershipEquation(const Profile& profile, const Triple& triple);

// Values `alt` takes in an order over exactly three alternatives. Ties are
// inclusive: x~y>z gives x both Best and Medium.
ValueSet ValuesOf(const WeakOrder& triple_order, AlternativeId alt);

OracleCheck CheckValueRestrictionOracle(const Profile& profile,
                                        const Triple& triple);

// Runs all three checkers on one triple. Throws InternalDisagreement if they
// do not agree.
TripleReport AnalyzeTriple(const Profile& profile, const Triple& triple);

// Every triple in canonical order. The condition holds iff each triple is
// value-restricted and has an odd number of concerned voters. Throws
// ProfileError for fewer than three alternatives.
SenVerdict SenCondition(const Profile& profile);

}  // namespace senvr

#endif  // SENVR_SEN_CHECK_H_
