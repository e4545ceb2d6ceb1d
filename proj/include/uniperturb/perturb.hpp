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

#ifndef UNIPERTURB_PERTURB_HPP_
#define UNIPERTURB_PERTURB_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "uniperturb/text.hpp"
#include "uniperturb/unicode_data.hpp"

namespace uniperturb {

enum class PerturbationClass { kInvisible, kHomoglyph, kReordering, kDeletion };

const char* to_string(PerturbationClass cls);

// One budget unit of imperceptible modification. `position` indexes
// codepoints of the original string; the payload is the invisible character
// to inject, the homoglyph replacement sequence, empty for a reordering
// swap, or the single filler character for a deletion pair.
struct Perturbation {
  PerturbationClass cls;
  std::size_t position;
  Text payload;

  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

// Inserts `cp` before codepoint index `pos`. `cp` must come from the
// configured invisible set.
Text inject_invisible(TextView x, std::size_t pos, char32_t cp,
                      const CodepointSet& invisible);

// Replaces the single codepoint at `pos` with `replacement`, which must be
// a registered confusable of it.
Text swap_homoglyph(TextView x, std::size_t pos, const Text& replacement,
                    const ConfusablesMap& map);

// The 10-control-character swap wrapper. The payloads are stored in memory
// as <one> then <two> but render as <two> then <one>.
Text encode_swap(TextView one, TextView two);

// Replaces x[pos], x[pos+1] with encode_swap(x[pos+1], x[pos]): encoded
// order reversed, visual rendering unchanged.
Text apply_swap(TextView x, std::size_t pos);

// All 2^(n-1) visually identical encodings of x built from nested swap
// wrappers, identity included. x must be non-empty and free of Bidi
// controls.
std::set<Text> generate_reorderings(TextView x);

// Inserts <filler, BACKSPACE> before index `pos`. The filler must be
// printable ASCII (the deletion filler alphabet).
Text inject_deletion(TextView x, std::size_t pos, char32_t filler,
                     const CodepointSet& fillers);

// A differential-evolution candidate: 2 real genes per budget unit
// (position gene, choice gene), each clamped to a closed interval.
struct Genome {
  std::vector<double> genes;
  std::vector<std::pair<double, double>> bounds;

  std::size_t budget() const { return genes.size() / 2; }
};

// Gene bounds for a fresh genome: position genes span [0, P] where P is the
// number of valid positions for the class on x, choice genes span [0, 1].
// Throws if the class cannot be applied to x at all (see decode_genome).
Genome make_genome(std::size_t budget, TextView x, PerturbationClass cls,
                   const ConfusablesMap& map, const Alphabets& alphabets);

// Deterministically decodes a genome into exactly `budget` perturbations.
// Position genes floor-clamp into the valid range; choice genes select
// uniformly by index from the class alphabet. Homoglyph positions advance
// cyclically past characters with no confusables.
std::vector<Perturbation> decode_genome(const Genome& genome, TextView x,
                                        PerturbationClass cls,
                                        const ConfusablesMap& map,
                                        const Alphabets& alphabets);

// Applies a perturbation list in descending original-position order
// (stable). Later-listed homoglyphs/swaps whose target indices were already
// consumed are dropped; their budget still counts.
Text apply_perturbations(TextView x, const std::vector<Perturbation>& ps);

}  // namespace uniperturb

#endif  // UNIPERTURB_PERTURB_HPP_
