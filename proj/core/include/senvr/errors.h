#ifndef SENVR_ERRORS_H_
#define SENVR_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace senvr {

// Classes of a weak order do not form an ordered partition of the universe.
class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A profile violates its structural invariants (too few alternatives, voters
// over the wrong universe, duplicate names).
class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size parameter is outside the guard of an enumerator or harness.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A name does not refer to any declared alternative.
class UnknownAlternative : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The union-inequality, membership-equation and qualitative checkers
// disagreed on some triple. Always an implementation bug.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed profile document. line() is 1-based; 0 means the error concerns
// the document as a whole (e.g. it declares no voters).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error(line == 0 ? reason
                                     : "line " + std::to_string(line) + ": " +
                                           reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace senvr

#endif  // SENVR_ERRORS_H_
