#include "senvr/sen_check.h"

#include <string>

#include "senvr/errors.h"
#include "senvr/preference_map.h"

namespace senvr {

namespace {

void RequireTripleInProfile(const Profile& profile, const Triple& triple) {
  if (profile.alternative_count() < 3) {
    throw ProfileError("value restriction needs at least 3 alternatives");
  }
  if (triple[2].index >= profile.alternative_count()) {
    throw std::out_of_range("triple member " +
                            std::to_string(triple[2].index) +
                            " outside the profile");
  }
}

std::vector<WeakOrder> ConcernedRestrictions(const Profile& profile,
                                             const Triple& triple) {
  std::vector<WeakOrder> orders;
  for (std::size_t v : ConcernedSet(profile, triple)) {
    orders.push_back(Restrict(profile.voter(v), triple));
  }
  return orders;
}

}  // namespace

std::string_view ToString(ValueLabel value) {
  switch (value) {
    case ValueLabel::kBest:
      return "best";
    case ValueLabel::kMedium:
      return "medium";
    case ValueLabel::kWorst:
      return "worst";
  }
  return "?";
}

std::vector<std::size_t> ConcernedSet(const Profile& profile,
                                      const Triple& triple) {
  RequireTripleInProfile(profile, triple);
  std::vector<std::size_t> concerned;
  for (std::size_t v = 0; v < profile.voter_count(); ++v) {
    if (!IsUnconcerned(profile.voter(v), triple)) concerned.push_back(v);
  }
  return concerned;
}

UnionCheck CheckUnionInequality(const Profile& profile, const Triple& triple) {
  UnionCheck check;
  for (const WeakOrder& order : ConcernedRestrictions(profile, triple)) {
    const PreferenceMap map = BuildPreferenceMap(order);
    for (std::size_t row = 0; row < 3; ++row) {
      for (std::size_t p = map.rows[row].first; p <= map.rows[row].last; ++p) {
        check.unions[row].insert(p);
      }
    }
  }
  for (std::size_t row = 0; row < 3; ++row) {
    if (check.unions[row].size() < 3) {
      check.holds = true;
      check.witness_row = row;
      break;
    }
  }
  return check;
}

SumCheck CheckMembershipEquation(const Profile& profile, const Triple& triple) {
  SumCheck check;
  for (const WeakOrder& order : ConcernedRestrictions(profile, triple)) {
    const MembershipMatrix mpm = BuildMembershipMatrix(BuildPreferenceMap(order));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) check.sums[i][j] += mpm.at(i, j);
    }
  }
  for (std::size_t i = 0; i < 3 && !check.holds; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (check.sums[i][j] == 0) {
        check.holds = true;
        check.witness_cell = Cell{i, j};
        break;
      }
    }
  }
  return check;
}

ValueSet ValuesOf(const WeakOrder& triple_order, AlternativeId alt) {
  if (triple_order.size() != 3) {
    throw std::invalid_argument("value sets are defined on triples only");
  }
  std::array<AlternativeId, 2> others;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i != alt.index) others[k++] = AlternativeId(i);
  }
  const auto geq = [&](AlternativeId a, AlternativeId b) {
    return triple_order.WeaklyPrefers(a, b);
  };
  const AlternativeId u = others[0];
  const AlternativeId v = others[1];

  ValueSet values;
  if (geq(alt, u) && geq(alt, v)) values.insert(ValueLabel::kBest);
  if (geq(u, alt) && geq(v, alt)) values.insert(ValueLabel::kWorst);
  if ((geq(u, alt) && geq(alt, v)) || (geq(v, alt) && geq(alt, u))) {
    values.insert(ValueLabel::kMedium);
  }
  return values;
}

OracleCheck CheckValueRestrictionOracle(const Profile& profile,
                                        const Triple& triple) {
  const std::vector<WeakOrder> orders = ConcernedRestrictions(profile, triple);
  OracleCheck check;
  for (std::size_t row = 0; row < 3 && !check.holds; ++row) {
    for (ValueLabel value : kAllValueLabels) {
      bool ever_taken = false;
      for (const WeakOrder& order : orders) {
        if (ValuesOf(order, AlternativeId(row)).contains(value)) {
          ever_taken = true;
          break;
        }
      }
      if (!ever_taken) {
        check.holds = true;
        check.witness = ValueWitness{row, value};
        break;
      }
    }
  }
  return check;
}

TripleReport AnalyzeTriple(const Profile& profile, const Triple& triple) {
  TripleReport report{.triple = triple,
                      .concerned = ConcernedSet(profile, triple),
                      .parity_ok = false,
                      .inequality = CheckUnionInequality(profile, triple),
                      .equation = CheckMembershipEquation(profile, triple),
                      .oracle = CheckValueRestrictionOracle(profile, triple)};
  report.parity_ok = report.concerned.size() % 2 == 1;
  if (report.inequality.holds != report.equation.holds ||
      report.inequality.holds != report.oracle.holds) {
    throw InternalDisagreement(
        "checkers disagree on triple (" + std::to_string(triple[0].index) +
        "," + std::to_string(triple[1].index) + "," +
        std::to_string(triple[2].index) + "): union=" +
        std::to_string(report.inequality.holds) +
        " sum=" + std::to_string(report.equation.holds) +
        " oracle=" + std::to_string(report.oracle.holds));
  }
  return report;
}

SenVerdict SenCondition(const Profile& profile) {
  if (profile.alternative_count() < 3) {
    throw ProfileError("value restriction needs at least 3 alternatives");
  }
  SenVerdict verdict;
  verdict.condition_holds = true;
  for (const Triple& triple : AllTriples(profile.alternative_count())) {
    TripleReport report = AnalyzeTriple(profile, triple);
    if (!report.value_restricted() || !report.parity_ok) {
      verdict.condition_holds = false;
    }
    verdict.per_triple.push_back(std::move(report));
  }
  return verdict;
}

}  // namespace senvr
