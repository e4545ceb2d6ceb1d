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

#include "uniperturb/defense.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "uniperturb/errors.hpp"

namespace uniperturb {

namespace {

bool is_bidi_control(char32_t cp) {
  return (cp >= 0x202A && cp <= 0x202E) || (cp >= 0x2066 && cp <= 0x2069) ||
         cp == 0x200E || cp == 0x200F;
}

bool is_deletion_control(char32_t cp) {
  return cp == 0x0008 || cp == 0x007F || cp == 0x000D;
}

// Union-find over confusable group members.
class Groups {
 public:
  char32_t find(char32_t cp) {
    auto it = parent_.find(cp);
    if (it == parent_.end()) {
      parent_[cp] = cp;
      return cp;
    }
    if (it->second == cp) return cp;
    const char32_t root = find(it->second);
    parent_[cp] = root;
    return root;
  }

  void unite(char32_t a, char32_t b) { parent_[find(a)] = find(b); }

  const std::unordered_map<char32_t, char32_t>& parents() const {
    return parent_;
  }

 private:
  std::unordered_map<char32_t, char32_t> parent_;
};

std::unordered_map<char32_t, char32_t> build_canonical(
    const ConfusablesMap& map, CanonicalPolicy policy) {
  Groups groups;
  for (char32_t source : map.sources()) {
    for (const Text& target : map.candidates(source)) {
      if (target.size() == 1) groups.unite(source, target[0]);
    }
  }
  // Collect members per root, then pick each group's canonical form.
  std::map<char32_t, std::vector<char32_t>> members;
  {
    std::vector<char32_t> all;
    for (const auto& [cp, _] : groups.parents()) all.push_back(cp);
    std::sort(all.begin(), all.end());
    for (char32_t cp : all) members[groups.find(cp)].push_back(cp);
  }
  std::unordered_map<char32_t, char32_t> canonical;
  for (const auto& [root, cps] : members) {
    char32_t canon = cps.front();  // lowest (members are sorted)
    if (policy == CanonicalPolicy::kAsciiThenLowest) {
      for (char32_t cp : cps) {
        if (cp <= 0x7F) {
          canon = cp;
          break;
        }
      }
    }
    for (char32_t cp : cps) {
      if (cp != canon) canonical.emplace(cp, canon);
    }
  }
  return canonical;
}

}  // namespace

DefenseConfig::DefenseConfig()
    : DefenseConfig(default_alphabets().invisible, builtin_intentional_map(),
                    CanonicalPolicy::kAsciiThenLowest) {}

DefenseConfig::DefenseConfig(CodepointSet invisible,
                             ConfusablesMap confusables,
                             CanonicalPolicy policy)
    : invisible_(std::move(invisible)),
      confusables_(std::move(confusables)),
      policy_(policy),
      canonical_(build_canonical(confusables_, policy_)) {}

char32_t DefenseConfig::canonical(char32_t cp) const {
  auto it = canonical_.find(cp);
  return it == canonical_.end() ? cp : it->second;
}

Text strip_invisible(TextView x, const CodepointSet& set) {
  Text out;
  out.reserve(x.size());
  for (char32_t cp : x) {
    if (!set.contains(cp)) out.push_back(cp);
  }
  return out;
}

namespace {

struct Cell {
  std::optional<char32_t> content;
  bool written = false;
};

void commit_line(std::vector<Cell>& cells, Text& out, bool first_line) {
  while (!cells.empty() && !cells.back().written) cells.pop_back();
  if (!first_line) out.push_back(U'\n');
  for (const Cell& cell : cells) {
    if (cell.content) out.push_back(*cell.content);
  }
  cells.clear();
}

}  // namespace

Text resolve_deletions(TextView x) {
  std::vector<Cell> cells;
  std::size_t cursor = 0;
  Text out;
  bool first_line = true;
  for (char32_t cp : x) {
    switch (cp) {
      case 0x0008:  // BS: back up without erasing
        if (cursor > 0) {
          --cursor;
          if (cursor < cells.size()) cells[cursor].written = false;
        }
        break;
      case 0x000D:  // CR: column 0
        cursor = 0;
        break;
      case 0x007F:  // DEL: erase the cell before the cursor
        if (cursor > 0) {
          --cursor;
          if (cursor < cells.size()) {
            cells[cursor].content.reset();
            cells[cursor].written = false;
          }
        }
        break;
      case 0x000A:  // LF: commit
        commit_line(cells, out, first_line);
        first_line = false;
        cursor = 0;
        break;
      default:
        if (cursor == cells.size()) cells.emplace_back();
        cells[cursor].content = cp;
        cells[cursor].written = true;
        ++cursor;
        break;
    }
  }
  commit_line(cells, out, first_line);
  return out;
}

namespace {

constexpr int kMaxBidiDepth = 125;

struct BidiRecord {
  char32_t cp;
  int level = 0;
  bool strong_rtl = false;  // resolved type after overrides
  bool removed = false;     // Bidi control, dropped from output
};

struct StackEntry {
  int level;
  int override_dir;  // 0 none, 1 LTR, 2 RTL
  bool isolate;
};

int next_even(int level) { return (level + 2) & ~1; }
int next_odd(int level) { return (level + 1) | 1; }

}  // namespace

Text resolve_bidi(TextView x) {
  std::vector<BidiRecord> recs;
  recs.reserve(x.size());

  std::vector<StackEntry> stack{{0, 0, false}};
  int overflow_isolate = 0;
  int overflow_embedding = 0;
  int valid_isolate = 0;

  for (char32_t cp : x) {
    BidiRecord rec;
    rec.cp = cp;
    const StackEntry& top = stack.back();
    switch (cp) {
      case 0x202A:    // LRE
      case 0x202B:    // RLE
      case 0x202D:    // LRO
      case 0x202E: {  // RLO
        rec.level = top.level;
        rec.removed = true;
        const bool rtl = cp == 0x202B || cp == 0x202E;
        const int level = rtl ? next_odd(top.level) : next_even(top.level);
        if (level <= kMaxBidiDepth && overflow_isolate == 0 &&
            overflow_embedding == 0) {
          const int override_dir =
              cp == 0x202D ? 1 : (cp == 0x202E ? 2 : 0);
          stack.push_back({level, override_dir, false});
        } else if (overflow_isolate == 0) {
          ++overflow_embedding;
        }
        break;
      }
      case 0x2066:    // LRI
      case 0x2067:    // RLI
      case 0x2068: {  // FSI: first strong is LTR in this model
        rec.level = top.level;
        rec.removed = true;
        const bool rtl = cp == 0x2067;
        const int level = rtl ? next_odd(top.level) : next_even(top.level);
        if (level <= kMaxBidiDepth && overflow_isolate == 0 &&
            overflow_embedding == 0) {
          ++valid_isolate;
          stack.push_back({level, 0, true});
        } else {
          ++overflow_isolate;
        }
        break;
      }
      case 0x2069: {  // PDI
        if (overflow_isolate > 0) {
          --overflow_isolate;
        } else if (valid_isolate > 0) {
          overflow_embedding = 0;
          while (!stack.back().isolate) stack.pop_back();
          stack.pop_back();
          --valid_isolate;
        }
        rec.level = stack.back().level;
        rec.removed = true;
        break;
      }
      case 0x202C: {  // PDF
        if (overflow_isolate > 0) {
          // ignored inside an overflowing isolate
        } else if (overflow_embedding > 0) {
          --overflow_embedding;
        } else if (!stack.back().isolate && stack.size() >= 2) {
          stack.pop_back();
        }
        rec.level = stack.back().level;
        rec.removed = true;
        break;
      }
      case 0x200E:    // LRM
      case 0x200F: {  // RLM
        rec.level = top.level;
        rec.strong_rtl =
            top.override_dir == 0 ? cp == 0x200F : top.override_dir == 2;
        rec.removed = true;
        break;
      }
      default: {
        rec.level = top.level;
        rec.strong_rtl = top.override_dir == 2;
        break;
      }
    }
    recs.push_back(rec);
  }

  // I1/I2: bump characters whose resolved direction disagrees with their
  // level parity. Removed controls are exempt and keep their assigned
  // levels (they only exist to hold runs together).
  int max_level = 0;
  for (BidiRecord& rec : recs) {
    if (!rec.removed) {
      const bool even = rec.level % 2 == 0;
      if (even && rec.strong_rtl) ++rec.level;
      if (!even && !rec.strong_rtl) ++rec.level;
    }
    max_level = std::max(max_level, rec.level);
  }

  // L2: from the highest level down to 1, reverse maximal runs at that
  // level or higher. Removed controls keep their levels so runs stay
  // contiguous across them.
  for (int level = max_level; level >= 1; --level) {
    std::size_t i = 0;
    while (i < recs.size()) {
      if (recs[i].level < level) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < recs.size() && recs[j].level >= level) ++j;
      std::reverse(recs.begin() + static_cast<std::ptrdiff_t>(i),
                   recs.begin() + static_cast<std::ptrdiff_t>(j));
      i = j;
    }
  }

  Text out;
  out.reserve(recs.size());
  for (const BidiRecord& rec : recs) {
    if (!rec.removed) out.push_back(rec.cp);
  }
  return out;
}

Text normalize_homoglyphs(TextView x, const DefenseConfig& cfg) {
  Text out;
  out.reserve(x.size());
  for (char32_t cp : x) out.push_back(cfg.canonical(cp));
  return out;
}

Text visual_normal_form(TextView x, const DefenseConfig& cfg) {
  Text t(x);
  if (cfg.bidi_enabled) t = resolve_bidi(t);
  if (cfg.deletions_enabled) t = resolve_deletions(t);
  if (cfg.invisible_enabled) t = strip_invisible(t, cfg.invisible());
  if (cfg.homoglyphs_enabled) t = normalize_homoglyphs(t, cfg);
  return t;
}

std::size_t DetectionReport::count(PerturbationClass cls) const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(),
                    [cls](const Finding& f) { return f.cls == cls; }));
}

namespace {

enum class Script { kOther, kLatin, kGreek, kCyrillic };

Script script_of(char32_t cp) {
  if ((cp >= U'A' && cp <= U'Z') || (cp >= U'a' && cp <= U'z') ||
      (cp >= 0x00C0 && cp <= 0x024F && cp != 0x00D7 && cp != 0x00F7))
    return Script::kLatin;
  if (cp >= 0x0370 && cp <= 0x03FF) return Script::kGreek;
  if (cp >= 0x0400 && cp <= 0x052F) return Script::kCyrillic;
  return Script::kOther;
}

const char* script_name(Script s) {
  switch (s) {
    case Script::kLatin: return "Latin";
    case Script::kGreek: return "Greek";
    case Script::kCyrillic: return "Cyrillic";
    default: return "?";
  }
}

}  // namespace

DetectionReport detect(TextView x, const DefenseConfig& cfg) {
  DetectionReport report;
  std::vector<bool> flagged_homoglyph(x.size(), false);

  for (std::size_t i = 0; i < x.size(); ++i) {
    const char32_t cp = x[i];
    if (cfg.invisible().contains(cp)) {
      report.findings.push_back({PerturbationClass::kInvisible, i, Text(1, cp),
                                 codepoint_name(cp)});
    }
    if (is_bidi_control(cp)) {
      report.findings.push_back({PerturbationClass::kReordering, i,
                                 Text(1, cp), codepoint_name(cp)});
    }
    if (is_deletion_control(cp)) {
      report.findings.push_back({PerturbationClass::kDeletion, i, Text(1, cp),
                                 codepoint_name(cp)});
    }
    if (cfg.canonical(cp) != cp) {
      report.findings.push_back(
          {PerturbationClass::kHomoglyph, i, Text(1, cp),
           "non-canonical confusable of " +
               codepoint_label(cfg.canonical(cp))});
      flagged_homoglyph[i] = true;
    }
  }

  // Mixed-script words, reported only when the per-codepoint pass left some
  // cross-script character unexplained.
  std::size_t i = 0;
  while (i < x.size()) {
    if (is_unicode_whitespace(x[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < x.size() && !is_unicode_whitespace(x[j])) ++j;

    std::map<Script, std::size_t> counts;
    for (std::size_t k = i; k < j; ++k) {
      const Script s = script_of(x[k]);
      if (s != Script::kOther) ++counts[s];
    }
    if (counts.size() >= 2) {
      Script dominant = Script::kOther;
      std::size_t best = 0;
      for (const auto& [s, n] : counts) {
        if (n > best) {
          best = n;
          dominant = s;
        }
      }
      bool unexplained = false;
      std::string others;
      for (std::size_t k = i; k < j; ++k) {
        const Script s = script_of(x[k]);
        if (s != Script::kOther && s != dominant) {
          if (!flagged_homoglyph[k]) unexplained = true;
          std::string name = script_name(s);
          if (others.find(name) == std::string::npos) {
            if (!others.empty()) others += "+";
            others += name;
          }
        }
      }
      if (unexplained) {
        report.findings.push_back(
            {PerturbationClass::kHomoglyph, i, Text(x.substr(i, j - i)),
             std::string("mixed-script word (") + script_name(dominant) +
                 " with " + others + ")"});
      }
    }
    i = j;
  }

  std::stable_sort(report.findings.begin(), report.findings.end(),
                   [](const Finding& a, const Finding& b) {
                     return a.position < b.position;
                   });
  return report;
}

}  // namespace uniperturb
