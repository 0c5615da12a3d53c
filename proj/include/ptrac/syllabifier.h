// Copyright 2026 The ptrac Authors.
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

#ifndef PTRAC_SYLLABIFIER_H_
#define PTRAC_SYLLABIFIER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptrac/error.h"
#include "ptrac/inventory.h"
#include "ptrac/lexicon.h"

namespace ptrac {

enum class SyllableShape : std::uint8_t { kCV, kCVC, kCVCC };

std::string_view ShapeName(SyllableShape shape);

// One onset consonant, one vowel nucleus and a coda of up to two consonants.
struct Syllable {
  PhonemeId onset = 0;
  PhonemeId nucleus = 0;
  Sequence coda;

  SyllableShape shape() const {
    return static_cast<SyllableShape>(coda.size());
  }
  Sequence phonemes() const;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Why a sequence has no syllabification. When several apply, the first in
// declaration order is reported.
enum class SyllabificationFault : std::uint8_t {
  kNoNucleus,       // no vowel at all
  kVowelInitial,    // the first syllable would lack its onset
  kOnsetCluster,    // two or more consonants before the first vowel
  kAdjacentVowels,  // a vowel directly after a vowel
  kCodaTooLong,     // a coda of three or more consonants
};

std::string_view FaultName(SyllabificationFault fault);

class SyllabificationError : public Error {
 public:
  SyllabificationError(SyllabificationFault fault, std::size_t position,
                       const std::string& message)
      : Error(message), fault_(fault), position_(position) {}

  SyllabificationFault fault() const { return fault_; }
  // Index of the offending segment in the input sequence.
  std::size_t position() const { return position_; }

 private:
  SyllabificationFault fault_;
  std::size_t position_;
};

// Minimal Onset syllabification: each vowel is a nucleus, the consonant
// right before it is its onset, and every other consonant closes the
// preceding syllable. Throws SyllabificationError.
std::vector<Syllable> Syllabify(std::span<const PhonemeId> seq,
                                const Inventory& inv);

// Syllables joined by '.', e.g. "satr.ha".
std::string FormatSyllables(std::span<const Syllable> syllables,
                            const Inventory& inv);

}  // namespace ptrac

#endif  // PTRAC_SYLLABIFIER_H_
