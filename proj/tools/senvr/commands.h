#ifndef SENVR_TOOLS_COMMANDS_H_
#define SENVR_TOOLS_COMMANDS_H_

#include <optional>
#include <ostream>
#include <string>

#include "senvr/harness.h"

namespace senvr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitSenAssertion = 3;
inline constexpr int kExitHarnessViolation = 4;

struct CheckOptions {
  std::string path;
  bool json = false;
  bool assert_sen = false;
};

struct PmOptions {
  std::string path;
  std::optional<std::string> triple;  // "a,b,c"
  bool json = false;
};

struct VerifyOptions {
  HarnessConfig config;
  bool json = false;
};

int RunCheck(const CheckOptions& options, std::ostream& out, std::ostream& err);
int RunPm(const PmOptions& options, std::ostream& out, std::ostream& err);
int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err);

// Parses argv and dispatches to one of the commands above.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace senvr::cli

#endif  // SENVR_TOOLS_COMMANDS_H_
