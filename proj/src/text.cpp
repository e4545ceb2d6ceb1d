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

#include "uniperturb/text.hpp"

#include <array>
#include <cstdint>

#include "uniperturb/errors.hpp"

namespace uniperturb {

bool is_scalar_value(char32_t cp) {
  return cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
}

bool is_ascii_printable(char32_t cp) { return cp >= 0x20 && cp <= 0x7E; }

bool is_ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

bool is_unicode_whitespace(char32_t cp) {
  // White_Space=Yes, pinned. Note that ZWSP (U+200B) is *not* whitespace.
  switch (cp) {
    case 0x0009: case 0x000A: case 0x000B: case 0x000C: case 0x000D:
    case 0x0020: case 0x0085: case 0x00A0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

Text utf8_decode(std::string_view bytes) {
  Text out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](const char* why) -> char32_t {
    throw ArgumentError("invalid UTF-8 at byte offset " + std::to_string(i) +
                        ": " + why);
  };
  while (i < bytes.size()) {
    const auto b0 = static_cast<std::uint8_t>(bytes[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      fail("bad leading byte");
    }
    if (i + len > bytes.size()) fail("truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<std::uint8_t>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) fail("bad continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr std::array<char32_t, 5> kMin = {0, 0, 0x80, 0x800,
                                                     0x10000};
    if (cp < kMin[len]) fail("overlong encoding");
    if (!is_scalar_value(cp)) fail("not a scalar value");
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(TextView text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (!is_scalar_value(cp))
      throw ArgumentError("cannot encode non-scalar value");
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

namespace {

constexpr char kHexDigits[] = "0123456789ABCDEF";

void append_escaped(std::string& out, char32_t cp) {
  char buf[6];
  int n = 0;
  char32_t v = cp;
  do {
    buf[n++] = kHexDigits[v & 0xF];
    v >>= 4;
  } while (v != 0);
  out += "\\u{";
  for (int pad = n; pad < 4; ++pad) out.push_back('0');
  while (n > 0) out.push_back(buf[--n]);
  out.push_back('}');
}

}  // namespace

std::string escape_text(TextView text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (is_ascii_printable(cp) && cp != U'\\') {
      out.push_back(static_cast<char>(cp));
    } else {
      append_escaped(out, cp);
    }
  }
  return out;
}

Text unescape_text(std::string_view escaped) {
  // The input is UTF-8 that may contain \u{XXXX} escapes.
  const Text decoded = utf8_decode(escaped);
  Text out;
  out.reserve(decoded.size());
  std::size_t i = 0;
  while (i < decoded.size()) {
    if (decoded[i] != U'\\') {
      out.push_back(decoded[i++]);
      continue;
    }
    if (i + 2 >= decoded.size() || decoded[i + 1] != U'u' ||
        decoded[i + 2] != U'{') {
      throw ArgumentError("stray backslash: only \\u{XXXX} escapes allowed");
    }
    std::size_t j = i + 3;
    char32_t cp = 0;
    std::size_t digits = 0;
    while (j < decoded.size() && decoded[j] != U'}') {
      const char32_t c = decoded[j];
      int v;
      if (c >= U'0' && c <= U'9') v = static_cast<int>(c - U'0');
      else if (c >= U'a' && c <= U'f') v = static_cast<int>(c - U'a') + 10;
      else if (c >= U'A' && c <= U'F') v = static_cast<int>(c - U'A') + 10;
      else throw ArgumentError("non-hex digit in \\u{...} escape");
      cp = (cp << 4) | static_cast<char32_t>(v);
      ++digits;
      ++j;
      if (digits > 6) throw ArgumentError("escape longer than 6 hex digits");
    }
    if (j >= decoded.size()) throw ArgumentError("unterminated \\u{ escape");
    if (digits == 0) throw ArgumentError("empty \\u{} escape");
    if (!is_scalar_value(cp))
      throw ArgumentError("escape names a non-scalar value");
    out.push_back(cp);
    i = j + 1;
  }
  return out;
}

std::string codepoint_name(char32_t cp) {
  switch (cp) {
    case 0x0008: return "BACKSPACE";
    case 0x000D: return "CARRIAGE RETURN";
    case 0x007F: return "DELETE";
    case 0x200B: return "ZERO WIDTH SPACE";
    case 0x200C: return "ZERO WIDTH NON-JOINER";
    case 0x200D: return "ZERO WIDTH JOINER";
    case 0x200E: return "LEFT-TO-RIGHT MARK";
    case 0x200F: return "RIGHT-TO-LEFT MARK";
    case 0x202A: return "LEFT-TO-RIGHT EMBEDDING";
    case 0x202B: return "RIGHT-TO-LEFT EMBEDDING";
    case 0x202C: return "POP DIRECTIONAL FORMATTING";
    case 0x202D: return "LEFT-TO-RIGHT OVERRIDE";
    case 0x202E: return "RIGHT-TO-LEFT OVERRIDE";
    case 0x2066: return "LEFT-TO-RIGHT ISOLATE";
    case 0x2067: return "RIGHT-TO-LEFT ISOLATE";
    case 0x2068: return "FIRST STRONG ISOLATE";
    case 0x2069: return "POP DIRECTIONAL ISOLATE";
    default: return "";
  }
}

std::string codepoint_label(char32_t cp) {
  std::string hex;
  char32_t v = cp;
  do {
    hex.insert(hex.begin(), kHexDigits[v & 0xF]);
    v >>= 4;
  } while (v != 0);
  while (hex.size() < 4) hex.insert(hex.begin(), '0');
  return "U+" + hex;
}

}  // namespace uniperturb
