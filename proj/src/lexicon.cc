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

#include "ptrac/lexicon.h"

#include <algorithm>
#include <utility>

#include "text_util.h"

namespace ptrac {

Sequence TokenizeTranscription(std::string_view text, const Inventory& inv) {
  Sequence seq;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    const std::size_t longest =
        std::min(inv.max_symbol_length(), text.size() - pos);
    bool matched = false;
    for (std::size_t len = longest; len > 0; --len) {
      if (auto id = inv.Find(text.substr(pos, len))) {
        seq.push_back(*id);
        pos += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      const std::size_t len = std::min(
          internal::Utf8Length(static_cast<unsigned char>(text[pos])),
          text.size() - pos);
      std::string fragment(text.substr(pos, len));
      throw TokenizeError(pos, fragment,
                          "no inventory symbol matches '" + fragment +
                              "' at offset " + std::to_string(pos));
    }
  }
  if (seq.empty()) throw TokenizeError(0, "", "empty transcription");
  return seq;
}

std::string Transcribe(std::span<const PhonemeId> seq, const Inventory& inv) {
  std::string out;
  for (PhonemeId id : seq) out += inv.symbol(id);
  return out;
}

void Lexicon::Add(LexEntry entry) {
  if (entry.transcription.empty()) {
    throw Error("entry '" + entry.orthography + "' has an empty transcription");
  }
  for (PhonemeId id : entry.transcription) {
    if (id >= inventory_->size()) {
      throw Error("entry '" + entry.orthography +
                  "' references a phoneme outside the inventory");
    }
  }
  entries_.push_back(std::move(entry));
}

LexiconParseResult ParseLexicon(std::string_view text, const Inventory& inv,
                                LexiconOptions options) {
  LexiconParseResult result{Lexicon(inv), {}};
  auto reject = [&](std::size_t line, std::string message) {
    if (options.strict) throw ParseError(line, message);
    result.diagnostics.push_back({line, std::move(message)});
  };

  internal::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    const std::string_view trimmed = internal::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') return;

    const auto columns = internal::Split(line, '\t');
    if (columns.size() < 2) {
      reject(line_no, "expected 'orthography<TAB>transcription'");
      return;
    }
    if (columns.size() > 3) {
      reject(line_no, "too many columns (" + std::to_string(columns.size()) + ")");
      return;
    }
    const std::string_view orthography = internal::Trim(columns[0]);
    if (orthography.empty()) {
      reject(line_no, "empty orthography");
      return;
    }
    try {
      Sequence seq = TokenizeTranscription(internal::Trim(columns[1]), inv);
      result.lexicon.Add({std::string(orthography), std::move(seq), line_no});
    } catch (const TokenizeError& e) {
      reject(line_no, "'" + std::string(orthography) + "': " + e.what());
    }
  });
  return result;
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  const Inventory& inv = lexicon.inventory();
  std::string out;
  for (const LexEntry& entry : lexicon.entries()) {
    out += entry.orthography;
    out += '\t';
    if (inv.has_multi_char_symbols()) {
      for (std::size_t i = 0; i < entry.transcription.size(); ++i) {
        if (i > 0) out += ' ';
        out += inv.symbol(entry.transcription[i]);
      }
    } else {
      out += Transcribe(entry.transcription, inv);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ptrac
