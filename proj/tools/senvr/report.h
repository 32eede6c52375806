#ifndef SENVR_TOOLS_REPORT_H_
#define SENVR_TOOLS_REPORT_H_

#include <optional>
#include <ostream>

#include "json.hpp"
#include "senvr/harness.h"
#include "senvr/majority.h"
#include "senvr/profile.h"
#include "senvr/sen_check.h"

namespace senvr::cli {

using Json = nlohmann::ordered_json;

// Everything `senvr check` reports for one profile.
struct CheckAnalysis {
  Profile profile;
  SenVerdict sen;
  PairwiseTally tally;
  SocialRelation relation;
  TransitivityCheck transitivity;
  SocialOutcome social;
};

CheckAnalysis Analyze(Profile profile);

// Schema:
//   {"alternatives": [name],
//    "triples": [{"members": [3 names], "concerned": [1-based voter],
//                 "parity_ok": bool, "value_restricted": bool,
//                 "ineq_witness": name|null,
//                 "union_sets": {name: [position]},
//                 "sum_matrix": [[int x3] x3],
//                 "eq_witness": [row, col]|null,            (1-based)
//                 "oracle_witness": {"alternative": name,
//                                    "value": "best|medium|worst"}|null}],
//    "condition_holds": bool,
//    "tallies": [[int]],
//    "social": {"transitive": bool, "ordering": [[name]]|null,
//               "cycle": [3 names]|null}}
Json CheckReportJson(const CheckAnalysis& analysis);
void WriteCheckReport(const CheckAnalysis& analysis, std::ostream& out);

// Per-voter preference maps, optionally restricted to `triple`.
//   {"alternatives": [name], "triple": [3 names]|null,
//    "voters": [{"voter": int, "order": string, "rows": [name],
//                "pm": [[position]], "mpm": [[0|1]]}]}
Json PmReportJson(const Profile& profile, const std::optional<Triple>& triple);
void WritePmReport(const Profile& profile, const std::optional<Triple>& triple,
                   std::ostream& out);

// Config echo plus every HarnessReport counter. Thread count is omitted so
// that output is identical for any degree of parallelism.
Json HarnessReportJson(const HarnessConfig& config,
                       const HarnessReport& report);
void WriteHarnessReport(const HarnessConfig& config,
                        const HarnessReport& report, std::ostream& out);

}  // namespace senvr::cli

#endif  // SENVR_TOOLS_REPORT_H_
