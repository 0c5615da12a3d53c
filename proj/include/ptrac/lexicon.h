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

#ifndef PTRAC_LEXICON_H_
#define PTRAC_LEXICON_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptrac/error.h"
#include "ptrac/inventory.h"

namespace ptrac {

using Sequence = std::vector<PhonemeId>;

// Raised when a transcription cannot be segmented into inventory symbols.
class TokenizeError : public Error {
 public:
  TokenizeError(std::size_t offset, std::string fragment,
                const std::string& message)
      : Error(message), offset_(offset), fragment_(std::move(fragment)) {}

  std::size_t offset() const { return offset_; }
  const std::string& fragment() const { return fragment_; }

 private:
  std::size_t offset_;
  std::string fragment_;
};

// Greedy longest-match segmentation into inventory symbols. ASCII spaces
// separate symbols and are otherwise ignored; "?" reads as the glottal stop.
Sequence TokenizeTranscription(std::string_view text, const Inventory& inv);

// Concatenated symbols, e.g. "band".
std::string Transcribe(std::span<const PhonemeId> seq, const Inventory& inv);

struct LexEntry {
  std::string orthography;
  Sequence transcription;
  std::size_t line = 0;  // source line, 0 if built in memory

  // The source line is not part of an entry's identity.
  friend bool operator==(const LexEntry& a, const LexEntry& b) {
    return a.orthography == b.orthography &&
           a.transcription == b.transcription;
  }
};

struct Diagnostic {
  std::size_t line = 0;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Ordered list of word types over one inventory. Homophones are separate
// entries. The inventory must outlive the lexicon.
class Lexicon {
 public:
  explicit Lexicon(const Inventory& inventory) : inventory_(&inventory) {}

  // Throws Error if the transcription is empty or holds foreign ids.
  void Add(LexEntry entry);

  const Inventory& inventory() const { return *inventory_; }
  std::span<const LexEntry> entries() const { return entries_; }
  const LexEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.inventory_ == b.inventory_ && a.entries_ == b.entries_;
  }

 private:
  const Inventory* inventory_;
  std::vector<LexEntry> entries_;
};

struct LexiconOptions {
  // Promote the first diagnostic to a ParseError.
  bool strict = false;
};

struct LexiconParseResult {
  Lexicon lexicon;
  std::vector<Diagnostic> diagnostics;
};

// Reads `orthography<TAB>transcription[<TAB>ignored]` lines. Lines starting
// with '#' and blank lines are skipped; malformed lines become diagnostics.
LexiconParseResult ParseLexicon(std::string_view text, const Inventory& inv,
                                LexiconOptions options = {});

// Inverse of ParseLexicon for a diagnostic-free lexicon.
std::string SerializeLexicon(const Lexicon& lexicon);

}  // namespace ptrac

#endif  // PTRAC_LEXICON_H_
