#include "senvr/report.h"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <string>

#include "senvr/preference_map.h"
#include "senvr/profile_format.h"

namespace senvr::cli {

namespace {

template <typename Range>
std::string Braced(const Range& positions) {
  std::string out = "{";
  bool first = true;
  for (auto p : positions) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::string Braced(PositionInterval interval) {
  std::vector<std::size_t> positions;
  for (std::size_t p = interval.first; p <= interval.last; ++p) {
    positions.push_back(p);
  }
  return Braced(positions);
}

std::string TripleName(const Profile& profile, const Triple& triple) {
  return "(" + profile.name(triple[0]) + ", " + profile.name(triple[1]) +
         ", " + profile.name(triple[2]) + ")";
}

std::size_t NameWidth(const std::vector<std::string>& names) {
  std::size_t width = 0;
  for (const auto& n : names) width = std::max(width, n.size());
  return width;
}

Json OrderingJson(const WeakOrder& order, const Profile& profile) {
  Json classes = Json::array();
  for (const auto& cls : order.classes()) {
    Json names = Json::array();
    for (AlternativeId a : cls) names.push_back(profile.name(a));
    classes.push_back(std::move(names));
  }
  return classes;
}

Json TripleJson(const Profile& profile, const TripleReport& report) {
  const Triple& t = report.triple;
  Json j;
  j["members"] = {profile.name(t[0]), profile.name(t[1]), profile.name(t[2])};
  Json concerned = Json::array();
  for (std::size_t v : report.concerned) concerned.push_back(v + 1);
  j["concerned"] = std::move(concerned);
  j["parity_ok"] = report.parity_ok;
  j["value_restricted"] = report.value_restricted();
  j["ineq_witness"] = report.inequality.witness_row
                          ? Json(profile.name(t[*report.inequality.witness_row]))
                          : Json(nullptr);
  Json unions = Json::object();
  for (std::size_t r = 0; r < 3; ++r) {
    Json positions = Json::array();
    for (std::size_t p : report.inequality.unions[r]) positions.push_back(p);
    unions[profile.name(t[r])] = std::move(positions);
  }
  j["union_sets"] = std::move(unions);
  j["sum_matrix"] = report.equation.sums;
  if (report.equation.witness_cell) {
    j["eq_witness"] = {report.equation.witness_cell->row + 1,
                       report.equation.witness_cell->column + 1};
  } else {
    j["eq_witness"] = nullptr;
  }
  if (report.oracle.witness) {
    j["oracle_witness"] = {
        {"alternative", profile.name(t[report.oracle.witness->row])},
        {"value", std::string(ToString(report.oracle.witness->value))}};
  } else {
    j["oracle_witness"] = nullptr;
  }
  return j;
}

void WriteTriple(const Profile& profile, const TripleReport& report,
                 std::ostream& out) {
  const Triple& t = report.triple;
  out << "triple " << TripleName(profile, t) << "\n";
  out << "  concerned voters:";
  if (report.concerned.empty()) out << " none";
  for (std::size_t v : report.concerned) out << ' ' << v + 1;
  out << " (count " << report.concerned_count() << ", "
      << (report.parity_ok ? "odd" : "even") << ")\n";
  out << "  value-restricted: " << (report.value_restricted() ? "yes" : "no")
      << "\n";

  out << "  union sets:";
  for (std::size_t r = 0; r < 3; ++r) {
    out << ' ' << profile.name(t[r]) << ' '
        << Braced(report.inequality.unions[r]);
  }
  out << "\n";
  out << "  union inequality: ";
  if (report.inequality.witness_row) {
    const std::size_t r = *report.inequality.witness_row;
    out << "holds; row " << profile.name(t[r]) << " union "
        << Braced(report.inequality.unions[r]) << " has cardinality "
        << report.inequality.unions[r].size() << " < 3\n";
  } else {
    out << "fails; every row union is {1,2,3}\n";
  }

  std::vector<std::string> members = {profile.name(t[0]), profile.name(t[1]),
                                      profile.name(t[2])};
  const std::size_t width = NameWidth(members);
  out << "  sum matrix:\n";
  for (std::size_t r = 0; r < 3; ++r) {
    out << "    " << std::left << std::setw(static_cast<int>(width))
        << members[r] << std::right;
    for (std::size_t c = 0; c < 3; ++c) {
      out << ' ' << std::setw(2) << report.equation.sums[r][c];
    }
    out << "\n";
  }
  out << "  membership equation: ";
  if (report.equation.witness_cell) {
    out << "holds; zero at (" << report.equation.witness_cell->row + 1 << ","
        << report.equation.witness_cell->column + 1 << ")\n";
  } else {
    out << "fails; minimum entry is positive\n";
  }
  out << "  qualitative check: ";
  if (report.oracle.witness) {
    out << "holds; " << profile.name(t[report.oracle.witness->row])
        << " is never " << ToString(report.oracle.witness->value) << "\n";
  } else {
    out << "fails; every alternative takes every value\n";
  }
}

}  // namespace

CheckAnalysis Analyze(Profile profile) {
  SenVerdict sen = SenCondition(profile);
  PairwiseTally tally = PairwiseTallies(profile);
  SocialRelation relation = MajorityRelation(tally);
  TransitivityCheck transitivity = CheckTransitivity(relation);
  SocialOutcome social = SocialOrdering(relation);
  return CheckAnalysis{std::move(profile),  std::move(sen),
                       std::move(tally),    std::move(relation),
                       std::move(transitivity), std::move(social)};
}

Json CheckReportJson(const CheckAnalysis& analysis) {
  const Profile& profile = analysis.profile;
  const std::size_t m = profile.alternative_count();
  Json j;
  j["alternatives"] = profile.names();
  Json triples = Json::array();
  for (const TripleReport& report : analysis.sen.per_triple) {
    triples.push_back(TripleJson(profile, report));
  }
  j["triples"] = std::move(triples);
  j["condition_holds"] = analysis.sen.condition_holds;

  Json tallies = Json::array();
  for (std::size_t a = 0; a < m; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m; ++b) {
      row.push_back(analysis.tally.prefer(AlternativeId(a), AlternativeId(b)));
    }
    tallies.push_back(std::move(row));
  }
  j["tallies"] = std::move(tallies);

  Json social;
  social["transitive"] = analysis.transitivity.transitive;
  if (const auto* order = std::get_if<WeakOrder>(&analysis.social)) {
    social["ordering"] = OrderingJson(*order, profile);
    social["cycle"] = nullptr;
  } else {
    const auto& cycle = std::get<CycleReport>(analysis.social);
    social["ordering"] = nullptr;
    social["cycle"] = {profile.name(cycle.witness[0]),
                       profile.name(cycle.witness[1]),
                       profile.name(cycle.witness[2])};
  }
  j["social"] = std::move(social);
  return j;
}

void WriteCheckReport(const CheckAnalysis& analysis, std::ostream& out) {
  const Profile& profile = analysis.profile;
  const std::size_t m = profile.alternative_count();
  out << "alternatives:";
  for (const auto& name : profile.names()) out << ' ' << name;
  out << "\nvoters: " << profile.voter_count() << "\n\n";

  for (const TripleReport& report : analysis.sen.per_triple) {
    WriteTriple(profile, report, out);
    out << "\n";
  }

  out << "condition holds: " << (analysis.sen.condition_holds ? "yes" : "no");
  if (!analysis.sen.condition_holds) {
    std::size_t unrestricted = 0, even = 0;
    for (const TripleReport& r : analysis.sen.per_triple) {
      if (!r.value_restricted()) ++unrestricted;
      if (!r.parity_ok) ++even;
    }
    out << " (" << unrestricted << " triple(s) not value-restricted, " << even
        << " triple(s) with an even concerned count)";
  }
  out << "\n\n";

  const std::size_t width = std::max<std::size_t>(NameWidth(profile.names()), 3);
  out << "pairwise tallies (row preferred to column):\n";
  out << "  " << std::setw(static_cast<int>(width)) << "";
  for (const auto& name : profile.names()) {
    out << ' ' << std::setw(static_cast<int>(width)) << name;
  }
  out << "\n";
  for (std::size_t a = 0; a < m; ++a) {
    out << "  " << std::left << std::setw(static_cast<int>(width))
        << profile.names()[a] << std::right;
    for (std::size_t b = 0; b < m; ++b) {
      out << ' ' << std::setw(static_cast<int>(width))
          << analysis.tally.prefer(AlternativeId(a), AlternativeId(b));
    }
    out << "\n";
  }

  std::vector<std::string> strict, ties;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const AlternativeId x(a), y(b);
      if (analysis.relation.StrictlyPrefers(x, y)) {
        strict.push_back(profile.name(x) + " > " + profile.name(y));
      } else if (a < b && analysis.relation.Indifferent(x, y)) {
        ties.push_back(profile.name(x) + " ~ " + profile.name(y));
      }
    }
  }
  const auto join = [](const std::vector<std::string>& parts) {
    if (parts.empty()) return std::string("none");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) s += ", ";
      s += parts[i];
    }
    return s;
  };
  out << "majority strict preferences: " << join(strict) << "\n";
  out << "majority indifferences: " << join(ties) << "\n";
  out << "transitive: " << (analysis.transitivity.transitive ? "yes" : "no")
      << "\n";
  if (const auto* order = std::get_if<WeakOrder>(&analysis.social)) {
    out << "social ordering: " << FormatOrder(*order, profile.names()) << "\n";
  } else {
    const auto& w = std::get<CycleReport>(analysis.social).witness;
    out << "majority cycle: " << profile.name(w[0]) << " >= "
        << profile.name(w[1]) << " >= " << profile.name(w[2]) << " > "
        << profile.name(w[0]) << "\n";
  }
}

Json PmReportJson(const Profile& profile, const std::optional<Triple>& triple) {
  Json j;
  j["alternatives"] = profile.names();
  if (triple) {
    j["triple"] = {profile.name((*triple)[0]), profile.name((*triple)[1]),
                   profile.name((*triple)[2])};
  } else {
    j["triple"] = nullptr;
  }
  Json voters = Json::array();
  for (std::size_t v = 0; v < profile.voter_count(); ++v) {
    const WeakOrder order =
        triple ? Restrict(profile.voter(v), *triple) : profile.voter(v);
    std::vector<std::string> rows;
    if (triple) {
      for (AlternativeId a : triple->members()) rows.push_back(profile.name(a));
    } else {
      rows = profile.names();
    }
    const PreferenceMap pm = BuildPreferenceMap(order);
    const MembershipMatrix mpm = BuildMembershipMatrix(pm);
    Json pm_rows = Json::array();
    Json mpm_rows = Json::array();
    for (std::size_t i = 0; i < pm.size(); ++i) {
      Json positions = Json::array();
      for (std::size_t p = pm.rows[i].first; p <= pm.rows[i].last; ++p) {
        positions.push_back(p);
      }
      pm_rows.push_back(std::move(positions));
      Json bits = Json::array();
      for (std::size_t c = 0; c < mpm.size(); ++c) bits.push_back(mpm.at(i, c));
      mpm_rows.push_back(std::move(bits));
    }
    Json voter;
    voter["voter"] = v + 1;
    voter["order"] = FormatOrder(order, rows);
    voter["rows"] = rows;
    voter["pm"] = std::move(pm_rows);
    voter["mpm"] = std::move(mpm_rows);
    voters.push_back(std::move(voter));
  }
  j["voters"] = std::move(voters);
  return j;
}

void WritePmReport(const Profile& profile, const std::optional<Triple>& triple,
                   std::ostream& out) {
  if (triple) out << "restricted to triple " << TripleName(profile, *triple) << "\n\n";
  for (std::size_t v = 0; v < profile.voter_count(); ++v) {
    const WeakOrder order =
        triple ? Restrict(profile.voter(v), *triple) : profile.voter(v);
    std::vector<std::string> rows;
    if (triple) {
      for (AlternativeId a : triple->members()) rows.push_back(profile.name(a));
    } else {
      rows = profile.names();
    }
    const PreferenceMap pm = BuildPreferenceMap(order);
    const MembershipMatrix mpm = BuildMembershipMatrix(pm);

    std::vector<std::string> cells;
    std::size_t cell_width = 2;
    for (const auto& row : pm.rows) {
      cells.push_back(Braced(row));
      cell_width = std::max(cell_width, cells.back().size());
    }
    const int name_width = static_cast<int>(NameWidth(rows));

    out << "voter " << v + 1 << ": " << FormatOrder(order, rows) << "\n";
    out << "  " << std::setw(name_width) << "" << "  " << std::left
        << std::setw(static_cast<int>(cell_width)) << "PM" << std::right
        << "  mPM";
    for (std::size_t c = 1; c <= mpm.size(); ++c) out << ' ' << c;
    out << "\n";
    for (std::size_t i = 0; i < pm.size(); ++i) {
      out << "  " << std::left << std::setw(name_width) << rows[i] << "  "
          << std::setw(static_cast<int>(cell_width)) << cells[i] << std::right
          << "     ";
      for (std::size_t c = 0; c < mpm.size(); ++c) {
        out << ' ' << std::setw(static_cast<int>(std::to_string(c + 1).size()))
            << static_cast<int>(mpm.at(i, c));
      }
      out << "\n";
    }
    out << "\n";
  }
}

Json HarnessReportJson(const HarnessConfig& config,
                       const HarnessReport& report) {
  Json j;
  Json cfg;
  cfg["alternatives"] = config.alternatives;
  cfg["voters"] = config.voters;
  if (config.mode == HarnessMode::kExhaustive) {
    cfg["mode"] = "exhaustive";
  } else {
    cfg["mode"] = "random";
    cfg["trials"] = config.trials;
    cfg["seed"] = config.seed;
  }
  j["config"] = std::move(cfg);
  j["profiles_tested"] = report.profiles_tested;
  j["triples_checked"] = report.triples_checked;
  j["condition_held_count"] = report.condition_held_count;
  j["condition_held_and_transitive_count"] =
      report.condition_held_and_transitive_count;
  j["condition_failed_count"] = report.condition_failed_count;
  j["condition_failed_but_transitive_count"] =
      report.condition_failed_but_transitive_count;
  j["violation_count"] = report.violation_count;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json voters = Json::array();
    for (const WeakOrder& order : v.profile.voters()) {
      voters.push_back(FormatOrder(order, v.profile.names()));
    }
    violations.push_back({{"index", v.index},
                          {"alternatives", v.profile.names()},
                          {"voters", std::move(voters)}});
  }
  j["violations"] = std::move(violations);
  return j;
}

void WriteHarnessReport(const HarnessConfig& config,
                        const HarnessReport& report, std::ostream& out) {
  out << "mode: ";
  if (config.mode == HarnessMode::kExhaustive) {
    out << "exhaustive\n";
  } else {
    out << "random (trials " << config.trials << ", seed " << config.seed
        << ")\n";
  }
  out << "alternatives: " << config.alternatives
      << ", voters: " << config.voters << "\n";
  out << "profiles tested: " << report.profiles_tested << "\n";
  out << "triples checked: " << report.triples_checked << "\n";
  out << "condition held: " << report.condition_held_count
      << " (transitive: " << report.condition_held_and_transitive_count
      << ")\n";
  out << "condition failed: " << report.condition_failed_count
      << " (transitive anyway: "
      << report.condition_failed_but_transitive_count << ")\n";
  out << "violations: " << report.violation_count << "\n";
  for (const Violation& v : report.violations) {
    out << "\nviolation at index " << v.index << ":\n"
        << FormatProfile(v.profile);
  }
}

}  // namespace senvr::cli
