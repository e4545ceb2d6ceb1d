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

#ifndef UNIPERTURB_TEXT_HPP_
#define UNIPERTURB_TEXT_HPP_

#include <string>
#include <string_view>

namespace uniperturb {

// All library operations work on sequences of Unicode scalar values.
using Text = std::u32string;
using TextView = std::u32string_view;

// Strict UTF-8 decoding. Rejects overlong forms, surrogates, and values
// beyond U+10FFFF.
Text utf8_decode(std::string_view bytes);
std::string utf8_encode(TextView text);

bool is_scalar_value(char32_t cp);
bool is_ascii_printable(char32_t cp);   // U+0020..U+007E
bool is_ascii_punct(char32_t cp);
bool is_unicode_whitespace(char32_t cp);

// Escape convention used by every human-facing surface: codepoints outside
// printable ASCII, plus backslash itself, become \u{XXXX} (>= 4 upper-case
// hex digits). The mapping is bit-exact and reversible.
std::string escape_text(TextView text);
Text unescape_text(std::string_view escaped);  // throws ArgumentError

// Well-known character names for diagnostics ("ZERO WIDTH SPACE", ...).
// Empty string when the codepoint is not in the (small) builtin table.
std::string codepoint_name(char32_t cp);

// "U+0430"-style spelling.
std::string codepoint_label(char32_t cp);

}  // namespace uniperturb

#endif  // UNIPERTURB_TEXT_HPP_
