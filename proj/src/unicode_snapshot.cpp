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

// Embedded copies of the bundled UTS #39 data snapshots. Kept byte-identical
// to data/intentional.txt and data/confusables.txt; a unit test enforces the
// equality.

#include "uniperturb/unicode_data.hpp"

namespace uniperturb {

std::string_view builtin_intentional_text() {
  static constexpr std::string_view kText = R"UPSNAP(# intentional.txt (pinned snapshot)
# Source: Unicode Security Mechanisms for UTS #39, Version 13.0.0
#   https://www.unicode.org/Public/security/13.0.0/intentional.txt
#
# Pairs of characters that are intentionally designed to look identical in
# most fonts. Field 1 is the source, Field 2 is the target. Either side may
# substitute for the other; consumers of this file treat the relation as
# symmetric.
#
# This bundled copy is the cross-script subset used as the default attack
# and defense alphabet for this toolkit; see the README for provenance.
#
# Format:
#   Field 1 ; Field 2 ; # comment

0021 ;	01C3 ;	# ( ! → ǃ ) EXCLAMATION MARK → LATIN LETTER RETROFLEX CLICK
2019 ;	02BC ;	# ( ’ → ʼ ) RIGHT SINGLE QUOTATION MARK → MODIFIER LETTER APOSTROPHE

# Cyrillic

0430 ;	0061 ;	# ( а → a ) CYRILLIC SMALL LETTER A → LATIN SMALL LETTER A
0441 ;	0063 ;	# ( с → c ) CYRILLIC SMALL LETTER ES → LATIN SMALL LETTER C
0501 ;	0064 ;	# ( ԁ → d ) CYRILLIC SMALL LETTER KOMI DE → LATIN SMALL LETTER D
0435 ;	0065 ;	# ( е → e ) CYRILLIC SMALL LETTER IE → LATIN SMALL LETTER E
04BB ;	0068 ;	# ( һ → h ) CYRILLIC SMALL LETTER SHHA → LATIN SMALL LETTER H
0456 ;	0069 ;	# ( і → i ) CYRILLIC SMALL LETTER BYELORUSSIAN-UKRAINIAN I → LATIN SMALL LETTER I
0458 ;	006A ;	# ( ј → j ) CYRILLIC SMALL LETTER JE → LATIN SMALL LETTER J
043E ;	006F ;	# ( о → o ) CYRILLIC SMALL LETTER O → LATIN SMALL LETTER O
0440 ;	0070 ;	# ( р → p ) CYRILLIC SMALL LETTER ER → LATIN SMALL LETTER P
051B ;	0071 ;	# ( ԛ → q ) CYRILLIC SMALL LETTER QA → LATIN SMALL LETTER Q
0455 ;	0073 ;	# ( ѕ → s ) CYRILLIC SMALL LETTER DZE → LATIN SMALL LETTER S
051D ;	0077 ;	# ( ԝ → w ) CYRILLIC SMALL LETTER WE → LATIN SMALL LETTER W
0445 ;	0078 ;	# ( х → x ) CYRILLIC SMALL LETTER HA → LATIN SMALL LETTER X
0443 ;	0079 ;	# ( у → y ) CYRILLIC SMALL LETTER U → LATIN SMALL LETTER Y
0410 ;	0041 ;	# ( А → A ) CYRILLIC CAPITAL LETTER A → LATIN CAPITAL LETTER A
0412 ;	0042 ;	# ( В → B ) CYRILLIC CAPITAL LETTER VE → LATIN CAPITAL LETTER B
0421 ;	0043 ;	# ( С → C ) CYRILLIC CAPITAL LETTER ES → LATIN CAPITAL LETTER C
0415 ;	0045 ;	# ( Е → E ) CYRILLIC CAPITAL LETTER IE → LATIN CAPITAL LETTER E
041D ;	0048 ;	# ( Н → H ) CYRILLIC CAPITAL LETTER EN → LATIN CAPITAL LETTER H
0406 ;	0049 ;	# ( І → I ) CYRILLIC CAPITAL LETTER BYELORUSSIAN-UKRAINIAN I → LATIN CAPITAL LETTER I
0408 ;	004A ;	# ( Ј → J ) CYRILLIC CAPITAL LETTER JE → LATIN CAPITAL LETTER J
041A ;	004B ;	# ( К → K ) CYRILLIC CAPITAL LETTER KA → LATIN CAPITAL LETTER K
041C ;	004D ;	# ( М → M ) CYRILLIC CAPITAL LETTER EM → LATIN CAPITAL LETTER M
041E ;	004F ;	# ( О → O ) CYRILLIC CAPITAL LETTER O → LATIN CAPITAL LETTER O
0420 ;	0050 ;	# ( Р → P ) CYRILLIC CAPITAL LETTER ER → LATIN CAPITAL LETTER P
0405 ;	0053 ;	# ( Ѕ → S ) CYRILLIC CAPITAL LETTER DZE → LATIN CAPITAL LETTER S
0422 ;	0054 ;	# ( Т → T ) CYRILLIC CAPITAL LETTER TE → LATIN CAPITAL LETTER T
0425 ;	0058 ;	# ( Х → X ) CYRILLIC CAPITAL LETTER HA → LATIN CAPITAL LETTER X
04AE ;	0059 ;	# ( Ү → Y ) CYRILLIC CAPITAL LETTER STRAIGHT U → LATIN CAPITAL LETTER Y

# Greek

03BF ;	006F ;	# ( ο → o ) GREEK SMALL LETTER OMICRON → LATIN SMALL LETTER O
03BD ;	0076 ;	# ( ν → v ) GREEK SMALL LETTER NU → LATIN SMALL LETTER V
0391 ;	0041 ;	# ( Α → A ) GREEK CAPITAL LETTER ALPHA → LATIN CAPITAL LETTER A
0392 ;	0042 ;	# ( Β → B ) GREEK CAPITAL LETTER BETA → LATIN CAPITAL LETTER B
0395 ;	0045 ;	# ( Ε → E ) GREEK CAPITAL LETTER EPSILON → LATIN CAPITAL LETTER E
0397 ;	0048 ;	# ( Η → H ) GREEK CAPITAL LETTER ETA → LATIN CAPITAL LETTER H
0399 ;	0049 ;	# ( Ι → I ) GREEK CAPITAL LETTER IOTA → LATIN CAPITAL LETTER I
039A ;	004B ;	# ( Κ → K ) GREEK CAPITAL LETTER KAPPA → LATIN CAPITAL LETTER K
039C ;	004D ;	# ( Μ → M ) GREEK CAPITAL LETTER MU → LATIN CAPITAL LETTER M
039D ;	004E ;	# ( Ν → N ) GREEK CAPITAL LETTER NU → LATIN CAPITAL LETTER N
039F ;	004F ;	# ( Ο → O ) GREEK CAPITAL LETTER OMICRON → LATIN CAPITAL LETTER O
03A1 ;	0050 ;	# ( Ρ → P ) GREEK CAPITAL LETTER RHO → LATIN CAPITAL LETTER P
03A4 ;	0054 ;	# ( Τ → T ) GREEK CAPITAL LETTER TAU → LATIN CAPITAL LETTER T
03A5 ;	0059 ;	# ( Υ → Y ) GREEK CAPITAL LETTER UPSILON → LATIN CAPITAL LETTER Y
03A7 ;	0058 ;	# ( Χ → X ) GREEK CAPITAL LETTER CHI → LATIN CAPITAL LETTER X
0396 ;	005A ;	# ( Ζ → Z ) GREEK CAPITAL LETTER ZETA → LATIN CAPITAL LETTER Z
)UPSNAP";
  return kText;
}

std::string_view builtin_confusables_text() {
  static constexpr std::string_view kText = R"UPSNAP(﻿# confusables.txt (pinned snapshot)
# Source: Unicode Security Mechanisms for UTS #39, Version 13.0.0
#   https://www.unicode.org/Public/security/13.0.0/confusables.txt
#
# Mapping from characters to their confusable-skeleton prototypes.
# Field 1 is the source, Field 2 is the target sequence, Field 3 is the
# type tag. One-directional as published.
#
# This bundled copy is a subset carrying the entries exercised by this
# toolkit's tests and CLI defaults; see the README for provenance.

0430 ;	0061 ;	MA	# ( а → a ) CYRILLIC SMALL LETTER A → LATIN SMALL LETTER A
0441 ;	0063 ;	MA	# ( с → c ) CYRILLIC SMALL LETTER ES → LATIN SMALL LETTER C
0501 ;	0064 ;	MA	# ( ԁ → d ) CYRILLIC SMALL LETTER KOMI DE → LATIN SMALL LETTER D
0435 ;	0065 ;	MA	# ( е → e ) CYRILLIC SMALL LETTER IE → LATIN SMALL LETTER E
043E ;	006F ;	MA	# ( о → o ) CYRILLIC SMALL LETTER O → LATIN SMALL LETTER O
0455 ;	0073 ;	MA	# ( ѕ → s ) CYRILLIC SMALL LETTER DZE → LATIN SMALL LETTER S
0445 ;	0078 ;	MA	# ( х → x ) CYRILLIC SMALL LETTER HA → LATIN SMALL LETTER X
03BF ;	006F ;	MA	# ( ο → o ) GREEK SMALL LETTER OMICRON → LATIN SMALL LETTER O
03F2 ;	0063 ;	MA	# ( ϲ → c ) GREEK LUNATE SIGMA SYMBOL → LATIN SMALL LETTER C
0261 ;	0067 ;	MA	# ( ɡ → g ) LATIN SMALL LETTER SCRIPT G → LATIN SMALL LETTER G
FF21 ;	0041 ;	MA	# ( Ａ → A ) FULLWIDTH LATIN CAPITAL LETTER A → LATIN CAPITAL LETTER A
FF41 ;	0061 ;	MA	# ( ａ → a ) FULLWIDTH LATIN SMALL LETTER A → LATIN SMALL LETTER A
2160 ;	0049 ;	MA	# ( Ⅰ → I ) ROMAN NUMERAL ONE → LATIN CAPITAL LETTER I
2126 ;	03A9 ;	MA	# ( Ω → Ω ) OHM SIGN → GREEK CAPITAL LETTER OMEGA
0149 ;	02BC 006E ;	MA	# ( ŉ → ʼn ) LATIN SMALL LETTER N PRECEDED BY APOSTROPHE → MODIFIER LETTER APOSTROPHE, LATIN SMALL LETTER N
FB01 ;	0066 0069 ;	MA	# ( ﬁ → fi ) LATIN SMALL LIGATURE FI → LATIN SMALL LETTER F, LATIN SMALL LETTER I
)UPSNAP";
  return kText;
}

}  // namespace uniperturb
