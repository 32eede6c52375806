#include "senvr/commands.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "senvr/errors.h"
#include "senvr/profile_format.h"
#include "senvr/report.h"

namespace senvr::cli {

namespace {

Profile LoadProfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  try {
    return ParseProfile(in);
  } catch (const ParseError& e) {
    if (e.line() == 0) throw std::runtime_error(path + ": " + e.reason());
    throw std::runtime_error(path + ":" + std::to_string(e.line()) + ": " +
                             e.reason());
  }
}

Triple ResolveTriple(const Profile& profile, const std::string& spec) {
  std::vector<AlternativeId> ids;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    const auto id = profile.Find(name);
    if (!id) throw UnknownAlternative("unknown alternative '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.size() != 3) {
    throw std::invalid_argument("--triple needs exactly 3 names, got '" +
                                spec + "'");
  }
  std::sort(ids.begin(), ids.end());
  if (ids[0] == ids[1] || ids[1] == ids[2]) {
    throw std::invalid_argument("--triple names must be distinct");
  }
  return Triple(ids[0], ids[1], ids[2]);
}

}  // namespace

int RunCheck(const CheckOptions& options, std::ostream& out,
             std::ostream& err) {
  std::optional<CheckAnalysis> analysis;
  try {
    analysis.emplace(Analyze(LoadProfile(options.path)));
  } catch (const InternalDisagreement& e) {
    err << "internal checker disagreement: " << e.what() << "\n";
    return kExitHarnessViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  if (options.json) {
    out << CheckReportJson(*analysis).dump(2) << "\n";
  } else {
    WriteCheckReport(*analysis, out);
  }
  if (options.assert_sen && !analysis->sen.condition_holds) {
    err << "value-restriction condition does not hold\n";
    return kExitSenAssertion;
  }
  return kExitOk;
}

int RunPm(const PmOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const Profile profile = LoadProfile(options.path);
    std::optional<Triple> triple;
    if (options.triple) triple = ResolveTriple(profile, *options.triple);
    if (options.json) {
      out << PmReportJson(profile, triple).dump(2) << "\n";
    } else {
      WritePmReport(profile, triple, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err) {
  HarnessReport report;
  try {
    report = RunHarness(options.config);
  } catch (const RangeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const InternalDisagreement& e) {
    err << "internal checker disagreement: " << e.what() << "\n";
    return kExitHarnessViolation;
  }
  if (options.json) {
    out << HarnessReportJson(options.config, report).dump(2) << "\n";
  } else {
    WriteHarnessReport(options.config, report, out);
  }
  return report.violation_count == 0 ? kExitOk : kExitHarnessViolation;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Value-restriction and majority-transitivity checker"};
  app.name("senvr");
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd =
      app.add_subcommand("check", "Per-triple value-restriction report");
  check_cmd->add_option("profile", check.path, "Profile file")->required();
  check_cmd->add_flag("--json", check.json, "Emit the JSON report");
  check_cmd->add_flag("--assert-sen", check.assert_sen,
                      "Exit 3 when the condition does not hold");

  PmOptions pm;
  std::string triple;
  auto* pm_cmd =
      app.add_subcommand("pm", "Preference maps and membership matrices");
  pm_cmd->add_option("profile", pm.path, "Profile file")->required();
  pm_cmd->add_option("--triple", triple, "Restrict to a triple, e.g. w,x,y");
  pm_cmd->add_flag("--json", pm.json, "Emit JSON");

  VerifyOptions verify;
  bool exhaustive = false;
  bool random = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Sweep profiles checking checker agreement and transitivity");
  verify_cmd->add_option("--m", verify.config.alternatives, "Alternatives")
      ->required();
  verify_cmd->add_option("--n", verify.config.voters, "Voters")->required();
  auto* exhaustive_flag =
      verify_cmd->add_flag("--exhaustive", exhaustive, "Every profile");
  auto* random_flag =
      verify_cmd->add_flag("--random", random, "Seeded random profiles");
  exhaustive_flag->excludes(random_flag);
  verify_cmd->add_option("--trials", verify.config.trials,
                         "Random profiles to draw")
      ->default_val(1000);
  verify_cmd->add_option("--seed", verify.config.seed, "Random seed")
      ->default_val(0);
  verify_cmd->add_option("--threads", verify.config.threads,
                         "Worker threads (0 = all cores)")
      ->default_val(0);
  verify_cmd->add_flag("--json", verify.json, "Emit JSON");

  try {
    app.parse(argc, argv);
    if (verify_cmd->parsed() && exhaustive == random) {
      throw CLI::ValidationError("verify",
                                 "exactly one of --exhaustive or --random");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (check_cmd->parsed()) return RunCheck(check, out, err);
  if (pm_cmd->parsed()) {
    if (!triple.empty()) pm.triple = triple;
    return RunPm(pm, out, err);
  }
  verify.config.mode = random ? HarnessMode::kRandom : HarnessMode::kExhaustive;
  return RunVerify(verify, out, err);
}

}  // namespace senvr::cli
