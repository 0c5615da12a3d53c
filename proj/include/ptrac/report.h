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

#ifndef PTRAC_REPORT_H_
#define PTRAC_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "ptrac/study.h"

namespace ptrac {

enum class Format : std::uint8_t { kCsv, kJson, kMarkdown, kSvg };

std::string_view FormatName(Format format);
std::optional<Format> ParseFormat(std::string_view name);

inline constexpr std::size_t kMaxChartColumns = 64;
inline constexpr std::string_view kCsvHeader =
    "context,feature,weighted_count,pair_count";

struct RenderSpec {
  Format format = Format::kCsv;
  Scheme scheme = Scheme::kFrame;
  // Standard output when unset.
  std::optional<std::filesystem::path> output;
};

// Extra fields for the JSON envelope.
struct RenderMetadata {
  std::optional<StudyConfig> config;
  std::size_t diagnostics = 0;
  std::size_t sequences = 0;
  std::size_t pairs = 0;
};

// Aggregates `matrix` to spec.scheme and renders it. Tabular formats emit one
// record per (context, feature): contexts in byte order, features as manner,
// place, voice. Output is a pure function of the arguments.
std::string RenderMatrix(const ContrastMatrix& matrix, const RenderSpec& spec,
                         const RenderMetadata& metadata = {});

// Grouped bar chart of weighted counts, one group per context. Throws Error
// past kMaxChartColumns contexts.
std::string RenderChart(const ContrastMatrix& matrix, const RenderSpec& spec);

// Writes to spec.output, or to `out` when no path is set. Throws IoError.
void WriteDocument(std::string_view document, const RenderSpec& spec,
                   std::ostream& out);

}  // namespace ptrac

#endif  // PTRAC_REPORT_H_
