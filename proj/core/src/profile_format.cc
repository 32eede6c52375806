#include "senvr/profile_format.h"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "senvr/errors.h"

namespace senvr {

namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s,
                                    std::string_view separators) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || separators.find(s[i]) != std::string_view::npos) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  for (std::string_view part : Split(s, " \t\v\f")) {
    if (!part.empty()) tokens.push_back(part);
  }
  return tokens;
}

struct Line {
  std::size_t number;
  std::string_view keyword;
  std::string_view body;
};

// Splits "keyword: body", or returns nullopt when there is no colon.
std::optional<Line> SplitKeyword(std::size_t number, std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return Line{number, Trim(text.substr(0, colon)), Trim(text.substr(colon + 1))};
}

std::vector<std::string> ParseDeclaration(const Line& line) {
  std::vector<std::string> names;
  std::set<std::string_view> seen;
  for (std::string_view token : SplitWhitespace(line.body)) {
    if (!IsValidAlternativeName(token)) {
      throw ParseError(line.number,
                       "invalid alternative name '" + std::string(token) + "'");
    }
    if (!seen.insert(token).second) {
      throw ParseError(line.number, "duplicate alternative declaration '" +
                                        std::string(token) + "'");
    }
    names.emplace_back(token);
  }
  if (names.size() < 2) {
    throw ParseError(line.number, "at least 2 alternatives must be declared");
  }
  return names;
}

WeakOrder ParseBallot(const Line& line, const std::vector<std::string>& names) {
  std::vector<WeakOrder::Class> classes;
  std::vector<bool> ranked(names.size(), false);
  for (std::string_view group : Split(line.body, ">")) {
    if (Trim(group).empty()) throw ParseError(line.number, "empty group");
    WeakOrder::Class cls;
    for (std::string_view raw : Split(group, "~=")) {
      const std::string_view token = Trim(raw);
      if (token.empty()) {
        throw ParseError(line.number, "empty name in tie group");
      }
      if (!IsValidAlternativeName(token)) {
        throw ParseError(line.number,
                         "invalid alternative name '" + std::string(token) +
                             "' (tied names are separated by '~' or '=')");
      }
      const auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end()) {
        throw ParseError(line.number,
                         "unknown alternative '" + std::string(token) + "'");
      }
      const auto index = static_cast<std::size_t>(it - names.begin());
      if (ranked[index]) {
        throw ParseError(line.number, "alternative '" + std::string(token) +
                                          "' appears more than once");
      }
      ranked[index] = true;
      cls.push_back(AlternativeId(index));
    }
    classes.push_back(std::move(cls));
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!ranked[i]) {
      throw ParseError(line.number, "missing alternative '" + names[i] + "'");
    }
  }
  return WeakOrder::FromClasses(std::move(classes), names.size());
}

}  // namespace

bool IsValidAlternativeName(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

Profile ParseProfile(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::vector<WeakOrder> voters;
  std::size_t number = 0;
  for (std::string_view raw : Split(text, "\n")) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view content = Trim(raw);
    if (content.empty()) continue;

    const std::optional<Line> line = SplitKeyword(number, content);
    if (!line) {
      throw ParseError(number, "expected 'alternatives:' or 'voter:'");
    }
    if (line->keyword == "alternatives") {
      if (names) {
        throw ParseError(number, "duplicate alternative declaration line");
      }
      names = ParseDeclaration(*line);
    } else if (line->keyword == "voter") {
      if (!names) {
        throw ParseError(number, "voter line before 'alternatives:' line");
      }
      voters.push_back(ParseBallot(*line, *names));
    } else {
      throw ParseError(number,
                       "unknown keyword '" + std::string(line->keyword) + "'");
    }
  }
  if (!names) throw ParseError(0, "missing 'alternatives:' declaration");
  if (voters.empty()) throw ParseError(0, "no voter lines");
  return Profile(std::move(*names), std::move(voters));
}

Profile ParseProfile(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return ParseProfile(std::string_view(text));
}

std::string FormatOrder(const WeakOrder& order,
                        const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t c = 0; c < order.class_count(); ++c) {
    if (c > 0) out += " > ";
    const auto& cls = order.classes()[c];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (k > 0) out += " ~ ";
      out += names.at(cls[k].index);
    }
  }
  return out;
}

std::string FormatProfile(const Profile& profile) {
  std::ostringstream out;
  out << "alternatives:";
  for (const auto& name : profile.names()) out << ' ' << name;
  out << '\n';
  for (const WeakOrder& order : profile.voters()) {
    out << "voter: " << FormatOrder(order, profile.names()) << '\n';
  }
  return out.str();
}

}  // namespace senvr
