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

#include "ptrac/syllabifier.h"

#include <algorithm>

namespace ptrac {

std::string_view ShapeName(SyllableShape shape) {
  switch (shape) {
    case SyllableShape::kCV:
      return "CV";
    case SyllableShape::kCVC:
      return "CVC";
    case SyllableShape::kCVCC:
      return "CVCC";
  }
  return "?";
}

std::string_view FaultName(SyllabificationFault fault) {
  switch (fault) {
    case SyllabificationFault::kNoNucleus:
      return "no-nucleus";
    case SyllabificationFault::kVowelInitial:
      return "vowel-initial";
    case SyllabificationFault::kOnsetCluster:
      return "onset-cluster";
    case SyllabificationFault::kAdjacentVowels:
      return "adjacent-vowels";
    case SyllabificationFault::kCodaTooLong:
      return "coda-too-long";
  }
  return "?";
}

Sequence Syllable::phonemes() const {
  Sequence out{onset, nucleus};
  out.insert(out.end(), coda.begin(), coda.end());
  return out;
}

std::vector<Syllable> Syllabify(std::span<const PhonemeId> seq,
                                const Inventory& inv) {
  auto fail = [&](SyllabificationFault fault, std::size_t pos,
                  const std::string& what) -> SyllabificationError {
    return SyllabificationError(
        fault, pos, "cannot syllabify /" + Transcribe(seq, inv) + "/: " + what);
  };

  if (std::none_of(seq.begin(), seq.end(),
                   [&](PhonemeId p) { return inv.IsVowel(p); })) {
    throw fail(SyllabificationFault::kNoNucleus, 0, "no vowel");
  }
  if (inv.IsVowel(seq.front())) {
    throw fail(SyllabificationFault::kVowelInitial, 0,
               "begins with a vowel, onset is obligatory");
  }
  if (inv.IsConsonant(seq[1])) {
    throw fail(SyllabificationFault::kOnsetCluster, 1,
               "word-initial consonant cluster, onsets are single consonants");
  }
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (inv.IsVowel(seq[i]) && inv.IsVowel(seq[i - 1])) {
      throw fail(SyllabificationFault::kAdjacentVowels, i,
                 "vowel at position " + std::to_string(i) +
                     " follows a vowel and has no onset");
    }
  }

  std::vector<Syllable> syllables;
  std::size_t i = 0;
  while (i < seq.size()) {
    // seq[i] is a consonant followed by a vowel.
    Syllable syl;
    syl.onset = seq[i];
    syl.nucleus = seq[i + 1];
    i += 2;
    // The coda runs up to the next onset, i.e. the consonant before the next
    // vowel, or to the end of the word.
    std::size_t run_end = i;
    while (run_end < seq.size() && inv.IsConsonant(seq[run_end])) ++run_end;
    const std::size_t coda_end = run_end == seq.size() ? run_end : run_end - 1;
    if (coda_end - i > 2) {
      throw fail(SyllabificationFault::kCodaTooLong, i,
                 "coda of " + std::to_string(coda_end - i) +
                     " consonants at position " + std::to_string(i));
    }
    syl.coda.assign(seq.begin() + static_cast<std::ptrdiff_t>(i),
                    seq.begin() + static_cast<std::ptrdiff_t>(coda_end));
    syllables.push_back(std::move(syl));
    i = coda_end;
  }
  return syllables;
}

std::string FormatSyllables(std::span<const Syllable> syllables,
                            const Inventory& inv) {
  std::string out;
  for (const Syllable& syl : syllables) {
    if (!out.empty()) out += '.';
    out += Transcribe(syl.phonemes(), inv);
  }
  return out;
}

}  // namespace ptrac
