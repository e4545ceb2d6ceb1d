// Copyright 2026 The uniperturb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uniperturb/unicode_data.hpp"

#include <algorithm>

#include "uniperturb/errors.hpp"

namespace uniperturb {

CodepointSet::CodepointSet(std::string name, std::vector<char32_t> members)
    : name_(std::move(name)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
  for (char32_t cp : members_) {
    if (!is_scalar_value(cp))
      throw ArgumentError("codepoint set '" + name_ +
                          "' contains a non-scalar value");
  }
}

bool CodepointSet::contains(char32_t cp) const {
  return std::binary_search(members_.begin(), members_.end(), cp);
}

void ConfusablesMap::add(char32_t source_cp, Text replacement) {
  if (replacement.empty())
    throw ArgumentError("empty confusable replacement sequence");
  if (replacement.size() == 1 && replacement[0] == source_cp)
    throw ArgumentError("confusable entry maps a codepoint to itself");
  auto& list = entries_[source_cp];
  if (std::find(list.begin(), list.end(), replacement) == list.end())
    list.push_back(std::move(replacement));
}

const std::vector<Text>& ConfusablesMap::candidates(char32_t cp) const {
  static const std::vector<Text> kEmpty;
  auto it = entries_.find(cp);
  return it == entries_.end() ? kEmpty : it->second;
}

std::vector<char32_t> ConfusablesMap::sources() const {
  std::vector<char32_t> out;
  out.reserve(entries_.size());
  for (const auto& [cp, _] : entries_) out.push_back(cp);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Text> homoglyph_candidates(const ConfusablesMap& map,
                                       char32_t cp) {
  return map.candidates(cp);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    --e;
  return std::string(s.substr(b, e - b));
}

char32_t parse_hex_field(const std::string& field, std::size_t line_no) {
  if (field.empty() || field.size() > 6)
    throw ParseError(line_no, "expected a 4-6 digit hex codepoint, got '" +
                                  field + "'");
  char32_t cp = 0;
  for (char c : field) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else
      throw ParseError(line_no, "non-hex character in codepoint field '" +
                                    field + "'");
    cp = (cp << 4) | static_cast<char32_t>(v);
  }
  if (!is_scalar_value(cp))
    throw ParseError(line_no, "codepoint " + field +
                                  " is not a Unicode scalar value");
  return cp;
}

// Splits the pre-comment part of a data line on ';' and trims each field.
// The published files end data fields with "; <TAB># comment", which leaves
// one empty trailing field after the final semicolon; that is dropped.
std::vector<std::string> data_fields(std::string_view line,
                                     std::size_t line_no) {
  const std::size_t hash = line.find('#');
  std::string_view data =
      hash == std::string_view::npos ? line : line.substr(0, hash);
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = data.find(';', start);
    if (semi == std::string_view::npos) {
      fields.push_back(trim(data.substr(start)));
      break;
    }
    fields.push_back(trim(data.substr(start, semi - start)));
    start = semi + 1;
  }
  while (!fields.empty() && fields.back().empty()) fields.pop_back();
  if (fields.empty())
    throw ParseError(line_no, "data line with no fields");
  return fields;
}

// Iterates data lines of a UTS #39-format file, skipping an optional BOM,
// comment lines, and blank lines.
template <typename Fn>
void for_each_data_line(std::string_view file_text, Fn&& fn) {
  std::string_view rest = file_text;
  if (rest.size() >= 3 && rest.substr(0, 3) == "\xEF\xBB\xBF")
    rest.remove_prefix(3);
  std::size_t line_no = 0;
  while (!rest.empty()) {
    ++line_no;
    const std::size_t nl = rest.find('\n');
    std::string_view line =
        nl == std::string_view::npos ? rest : rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{}
                                        : rest.substr(nl + 1);
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    fn(line, line_no);
  }
}

}  // namespace

ConfusablesMap parse_intentional(std::string_view file_text) {
  ConfusablesMap map(ConfusablesSource::kIntentional);
  for_each_data_line(file_text, [&](std::string_view line,
                                    std::size_t line_no) {
    const auto fields = data_fields(line, line_no);
    if (fields.size() != 2)
      throw ParseError(line_no,
                       "expected 2 fields, got " +
                           std::to_string(fields.size()));
    const char32_t a = parse_hex_field(fields[0], line_no);
    const char32_t b = parse_hex_field(fields[1], line_no);
    if (a == b) throw ParseError(line_no, "pair maps a codepoint to itself");
    map.add(a, Text(1, b));
    map.add(b, Text(1, a));
  });
  return map;
}

ConfusablesMap parse_confusables(std::string_view file_text) {
  ConfusablesMap map(ConfusablesSource::kConfusables);
  for_each_data_line(file_text, [&](std::string_view line,
                                    std::size_t line_no) {
    const auto fields = data_fields(line, line_no);
    if (fields.size() != 3)
      throw ParseError(line_no,
                       "expected 3 fields, got " +
                           std::to_string(fields.size()));
    const char32_t source = parse_hex_field(fields[0], line_no);
    Text target;
    std::size_t start = 0;
    const std::string& seq = fields[1];
    while (start < seq.size()) {
      std::size_t end = seq.find(' ', start);
      if (end == std::string::npos) end = seq.size();
      if (end > start)
        target.push_back(parse_hex_field(seq.substr(start, end - start),
                                         line_no));
      start = end + 1;
    }
    if (target.empty())
      throw ParseError(line_no, "empty target sequence");
    if (fields[2].empty())
      throw ParseError(line_no, "missing type tag");
    if (target.size() == 1 && target[0] == source)
      throw ParseError(line_no, "entry maps a codepoint to itself");
    map.add(source, std::move(target));
  });
  return map;
}

Alphabets default_alphabets() {
  Alphabets a;
  a.invisible = CodepointSet("invisible", {0x200B, 0x200C, 0x200D});
  a.bidi_controls = CodepointSet(
      "bidi_controls", {0x202A, 0x202B, 0x202C, 0x202D, 0x202E, 0x2066,
                        0x2067, 0x2068, 0x2069, 0x200E, 0x200F});
  a.deletion_controls =
      CodepointSet("deletion_controls", {0x0008, 0x007F, 0x000D});
  std::vector<char32_t> fillers;
  for (char32_t cp = 0x20; cp <= 0x7E; ++cp) fillers.push_back(cp);
  a.deletion_fillers = CodepointSet("deletion_fillers", std::move(fillers));
  return a;
}

const ConfusablesMap& builtin_intentional_map() {
  static const ConfusablesMap map =
      parse_intentional(builtin_intentional_text());
  return map;
}

}  // namespace uniperturb
