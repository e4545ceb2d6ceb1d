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

#include "uniperturb/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "uniperturb/errors.hpp"

namespace uniperturb {

namespace {

constexpr char32_t kPdf = 0x202C;
constexpr char32_t kLro = 0x202D;
constexpr char32_t kRlo = 0x202E;
constexpr char32_t kLri = 0x2066;
constexpr char32_t kPdi = 0x2069;
constexpr char32_t kBackspace = 0x0008;

bool is_bidi_control(char32_t cp) {
  return (cp >= 0x202A && cp <= 0x202E) || (cp >= 0x2066 && cp <= 0x2069) ||
         cp == 0x200E || cp == 0x200F;
}

}  // namespace

const char* to_string(PerturbationClass cls) {
  switch (cls) {
    case PerturbationClass::kInvisible: return "invisible";
    case PerturbationClass::kHomoglyph: return "homoglyph";
    case PerturbationClass::kReordering: return "reordering";
    case PerturbationClass::kDeletion: return "deletion";
  }
  return "?";
}

Text inject_invisible(TextView x, std::size_t pos, char32_t cp,
                      const CodepointSet& invisible) {
  if (pos > x.size())
    throw BoundsError("inject_invisible: position " + std::to_string(pos) +
                      " beyond length " + std::to_string(x.size()));
  if (!invisible.contains(cp))
    throw AlphabetError("inject_invisible: " + codepoint_label(cp) +
                        " not in the configured invisible set");
  Text out(x);
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), cp);
  return out;
}

Text swap_homoglyph(TextView x, std::size_t pos, const Text& replacement,
                    const ConfusablesMap& map) {
  if (pos >= x.size())
    throw BoundsError("swap_homoglyph: position " + std::to_string(pos) +
                      " beyond length " + std::to_string(x.size()));
  const auto& cands = map.candidates(x[pos]);
  if (std::find(cands.begin(), cands.end(), replacement) == cands.end())
    throw AlphabetError("swap_homoglyph: replacement is not a registered "
                        "confusable of " + codepoint_label(x[pos]));
  Text out(x.substr(0, pos));
  out += replacement;
  out += x.substr(pos + 1);
  return out;
}

Text encode_swap(TextView one, TextView two) {
  if (one.empty() || two.empty())
    throw ArgumentError("encode_swap: empty payload");
  Text out;
  out.reserve(one.size() + two.size() + 10);
  out += kLro;
  out += kLri;
  out += kRlo;
  out += kLri;
  out += one;
  out += kPdi;
  out += kLri;
  out += two;
  out += kPdi;
  out += kPdf;
  out += kPdi;
  out += kPdf;
  return out;
}

Text apply_swap(TextView x, std::size_t pos) {
  if (x.size() < 2)
    throw ArgumentError("apply_swap: need at least 2 codepoints");
  if (pos + 1 >= x.size())
    throw BoundsError("apply_swap: position " + std::to_string(pos) +
                      " has no successor in length " +
                      std::to_string(x.size()));
  Text out(x.substr(0, pos));
  out += encode_swap(x.substr(pos + 1, 1), x.substr(pos, 1));
  out += x.substr(pos + 2);
  return out;
}

namespace {

// A reordering of x is a composition into contiguous blocks; every block of
// size >= 2 is encoded as a left-grown chain of nested Swap{one=right part,
// two=left element} wrappers, so each block renders in original order. The
// chain for block [c0..ck] is encode(c1..ck) nested as `one` under c0.
Text encode_block(TextView block) {
  if (block.size() == 1) return Text(block);
  return encode_swap(encode_block(block.substr(1)), block.substr(0, 1));
}

// First-block recursion over element sequences: emit the leading element as
// a singleton, or fold a leading block of every length >= 2 into a swap
// chain, then recurse on the remainder. Set semantics over the final
// encodings; yields exactly 2^(n-1) members.
void swaps_rec(TextView rest, const Text& prefix, std::set<Text>& out) {
  if (rest.empty()) {
    out.insert(prefix);
    return;
  }
  swaps_rec(rest.substr(1), prefix + Text(rest.substr(0, 1)), out);
  for (std::size_t k = 2; k <= rest.size(); ++k)
    swaps_rec(rest.substr(k), prefix + encode_block(rest.substr(0, k)), out);
}

}  // namespace

std::set<Text> generate_reorderings(TextView x) {
  if (x.empty()) throw ArgumentError("generate_reorderings: empty input");
  for (char32_t cp : x) {
    if (is_bidi_control(cp))
      throw AlphabetError("generate_reorderings: input already contains the "
                          "Bidi control " + codepoint_label(cp));
  }
  std::set<Text> out;
  swaps_rec(x, Text(), out);
  return out;
}

Text inject_deletion(TextView x, std::size_t pos, char32_t filler,
                     const CodepointSet& fillers) {
  if (pos > x.size())
    throw BoundsError("inject_deletion: position " + std::to_string(pos) +
                      " beyond length " + std::to_string(x.size()));
  if (!fillers.contains(filler))
    throw AlphabetError("inject_deletion: filler " + codepoint_label(filler) +
                        " outside the deletion filler alphabet");
  Text out(x.substr(0, pos));
  out += filler;
  out += kBackspace;
  out += x.substr(pos);
  return out;
}

namespace {

// Number of valid positions for a class on x. 0 means infeasible.
std::size_t position_count(TextView x, PerturbationClass cls) {
  switch (cls) {
    case PerturbationClass::kInvisible: return x.size() + 1;
    case PerturbationClass::kHomoglyph: return x.size();
    case PerturbationClass::kReordering:
      return x.size() < 2 ? 0 : x.size() - 1;
    case PerturbationClass::kDeletion: return x.size();
  }
  return 0;
}

std::size_t clamp_index(double gene, double lo, double hi, std::size_t n) {
  const double clamped = std::min(std::max(gene, lo), hi);
  const double floored = std::floor(clamped);
  if (floored <= 0) return 0;
  const auto idx = static_cast<std::size_t>(floored);
  return std::min(idx, n - 1);
}

std::size_t choose_index(double gene, std::size_t n) {
  const double clamped = std::min(std::max(gene, 0.0), 1.0);
  const auto idx = static_cast<std::size_t>(clamped * static_cast<double>(n));
  return std::min(idx, n - 1);
}

void check_feasible(TextView x, PerturbationClass cls,
                    const ConfusablesMap& map, std::size_t budget) {
  if (budget == 0) return;
  if (x.empty())
    throw ArgumentError("cannot perturb an empty string with budget > 0");
  if (position_count(x, cls) == 0)
    throw ArgumentError("string too short for a reordering swap");
  if (cls == PerturbationClass::kHomoglyph) {
    const bool any = std::any_of(x.begin(), x.end(), [&](char32_t cp) {
      return !map.candidates(cp).empty();
    });
    if (!any)
      throw InfeasibleError(
          "homoglyph attack: no character of the input has a confusable");
  }
}

}  // namespace

Genome make_genome(std::size_t budget, TextView x, PerturbationClass cls,
                   const ConfusablesMap& map, const Alphabets& alphabets) {
  (void)alphabets;
  check_feasible(x, cls, map, budget);
  Genome g;
  g.genes.assign(budget * 2, 0.0);
  g.bounds.reserve(budget * 2);
  const auto positions = static_cast<double>(position_count(x, cls));
  for (std::size_t i = 0; i < budget; ++i) {
    g.bounds.emplace_back(0.0, positions);
    g.bounds.emplace_back(0.0, 1.0);
  }
  return g;
}

std::vector<Perturbation> decode_genome(const Genome& genome, TextView x,
                                        PerturbationClass cls,
                                        const ConfusablesMap& map,
                                        const Alphabets& alphabets) {
  const std::size_t budget = genome.budget();
  if (genome.genes.size() != genome.bounds.size() ||
      genome.genes.size() != budget * 2)
    throw ArgumentError("malformed genome");
  check_feasible(x, cls, map, budget);

  std::vector<Perturbation> out;
  out.reserve(budget);
  const std::size_t positions = position_count(x, cls);
  for (std::size_t i = 0; i < budget; ++i) {
    const double pos_gene = genome.genes[2 * i];
    const double choice_gene = genome.genes[2 * i + 1];
    const auto [plo, phi] = genome.bounds[2 * i];
    std::size_t pos = clamp_index(pos_gene, plo, phi, positions);

    Perturbation p;
    p.cls = cls;
    switch (cls) {
      case PerturbationClass::kInvisible: {
        const auto& set = alphabets.invisible.members();
        p.position = pos;
        p.payload = Text(1, set[choose_index(choice_gene, set.size())]);
        break;
      }
      case PerturbationClass::kHomoglyph: {
        // Advance cyclically to the next character that has confusables so
        // the budget unit is always spent.
        std::size_t probe = pos;
        while (map.candidates(x[probe]).empty())
          probe = (probe + 1) % x.size();
        const auto& cands = map.candidates(x[probe]);
        p.position = probe;
        p.payload = cands[choose_index(choice_gene, cands.size())];
        break;
      }
      case PerturbationClass::kReordering: {
        p.position = pos;  // the swap index; the choice gene is unused
        break;
      }
      case PerturbationClass::kDeletion: {
        const auto& fillers = alphabets.deletion_fillers.members();
        p.position = pos;
        p.payload =
            Text(1, fillers[choose_index(choice_gene, fillers.size())]);
        break;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void validate_against(TextView x, const Perturbation& p) {
  const std::size_t n = x.size();
  switch (p.cls) {
    case PerturbationClass::kInvisible:
      if (p.position > n)
        throw BoundsError("invisible perturbation beyond end of string");
      if (p.payload.size() != 1)
        throw ArgumentError("invisible perturbation needs a 1-codepoint "
                            "payload");
      break;
    case PerturbationClass::kHomoglyph:
      if (p.position >= n)
        throw BoundsError("homoglyph perturbation beyond end of string");
      if (p.payload.empty())
        throw ArgumentError("homoglyph perturbation with empty replacement");
      break;
    case PerturbationClass::kReordering:
      if (n < 2 || p.position >= n - 1)
        throw BoundsError("reordering swap needs a successor position");
      if (!p.payload.empty())
        throw ArgumentError("reordering perturbation carries no payload");
      break;
    case PerturbationClass::kDeletion:
      if (p.position >= n)
        throw BoundsError("deletion perturbation beyond end of string");
      if (p.payload.size() != 1 || !is_ascii_printable(p.payload[0]))
        throw ArgumentError("deletion perturbation needs one printable "
                            "ASCII filler");
      break;
  }
}

}  // namespace

Text apply_perturbations(TextView x, const std::vector<Perturbation>& ps) {
  for (const auto& p : ps) validate_against(x, p);

  // Descending original-position order keeps indices to the left valid;
  // stable so equal positions apply in list order.
  std::vector<const Perturbation*> order;
  order.reserve(ps.size());
  for (const auto& p : ps) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(),
                   [](const Perturbation* a, const Perturbation* b) {
                     return a->position > b->position;
                   });

  Text cur(x);
  std::set<std::size_t> consumed;  // original indices replaced or wrapped
  for (const Perturbation* p : order) {
    switch (p->cls) {
      case PerturbationClass::kInvisible: {
        cur.insert(cur.begin() + static_cast<std::ptrdiff_t>(p->position),
                   p->payload[0]);
        break;
      }
      case PerturbationClass::kDeletion: {
        Text pair{p->payload[0], kBackspace};
        cur.insert(p->position, pair);
        break;
      }
      case PerturbationClass::kHomoglyph: {
        if (consumed.count(p->position)) break;  // coalesced, budget spent
        cur = Text(cur.substr(0, p->position)) + p->payload +
              Text(cur.substr(p->position + 1));
        consumed.insert(p->position);
        break;
      }
      case PerturbationClass::kReordering: {
        if (consumed.count(p->position) || consumed.count(p->position + 1))
          break;  // overlapping swap dropped, budget spent
        cur = apply_swap(cur, p->position);
        consumed.insert(p->position);
        consumed.insert(p->position + 1);
        break;
      }
    }
  }
  return cur;
}

}  // namespace uniperturb
