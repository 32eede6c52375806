#ifndef SENVR_PROFILE_FORMAT_H_
#define SENVR_PROFILE_FORMAT_H_

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "senvr/profile.h"
#include "senvr/weak_order.h"

namespace senvr {

// Profile documents are line oriented; '#' starts a comment that runs to
// the end of the line, and blank lines are ignored.
//
//   alternatives: w x y z
//   voter: w = x > y > z     # '=' and '~' both mean "tied with"
//   voter: z > y ~ x > w
//
// The first significant line declares at least two distinct names matching
// [A-Za-z0-9_]+. Every further line is a ballot whose groups, best first,
// are separated by '>'. Each ballot must rank every alternative exactly
// once. LF and CRLF line endings are accepted.
//
// Throws ParseError carrying the offending line number.
Profile ParseProfile(std::string_view text);
Profile ParseProfile(std::istream& in);

// Canonical document for `profile`; ParseProfile(FormatProfile(p)) == p.
std::string FormatProfile(const Profile& profile);

// "x ~ z > y > w" style rendering with ties joined by '~'.
std::string FormatOrder(const WeakOrder& order,
                        const std::vector<std::string>& names);

bool IsValidAlternativeName(std::string_view name);

}  // namespace senvr

#endif  // SENVR_PROFILE_FORMAT_H_
