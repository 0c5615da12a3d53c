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

#include "ptrac/study.h"

namespace ptrac {
namespace {

template <typename Enum, std::size_t N>
std::optional<Enum> Lookup(
    const std::array<std::pair<Enum, std::string_view>, N>& table,
    std::string_view name) {
  for (const auto& [value, text] : table) {
    if (text == name) return value;
  }
  return std::nullopt;
}

template <typename Enum, std::size_t N>
std::string_view NameOf(
    const std::array<std::pair<Enum, std::string_view>, N>& table,
    Enum value) {
  for (const auto& [v, text] : table) {
    if (v == value) return text;
  }
  return "?";
}

constexpr std::array<std::pair<StudyKind, std::string_view>, 2> kKinds = {{
    {StudyKind::kClusters, "clusters"},
    {StudyKind::kPositions, "positions"},
}};

constexpr std::array<std::pair<Weighting, std::string_view>, 2> kWeightings = {{
    {Weighting::kTypeFrequency, "type-frequency"},
    {Weighting::kUnweighted, "unweighted"},
}};

constexpr std::array<std::pair<Scheme, std::string_view>, 5> kSchemes = {{
    {Scheme::kFrame, "frame"},
    {Scheme::kFollowingSegment, "following-segment"},
    {Scheme::kFollowingClass, "following-class"},
    {Scheme::kPosition, "position"},
    {Scheme::kTotal, "total"},
}};

}  // namespace

std::string_view StudyKindName(StudyKind kind) { return NameOf(kKinds, kind); }
std::optional<StudyKind> ParseStudyKind(std::string_view name) {
  return Lookup(kKinds, name);
}
std::string_view WeightingName(Weighting w) { return NameOf(kWeightings, w); }
std::optional<Weighting> ParseWeighting(std::string_view name) {
  return Lookup(kWeightings, name);
}
std::string_view SchemeName(Scheme scheme) { return NameOf(kSchemes, scheme); }
std::optional<Scheme> ParseScheme(std::string_view name) {
  return Lookup(kSchemes, name);
}

std::string SlotLabel(std::size_t slot) {
  // U+2080 SUBSCRIPT ZERO is E2 82 80; digits follow consecutively.
  std::string label = "C";
  for (char digit : std::to_string(slot)) {
    label += "\xE2\x82";
    label += static_cast<char>(0x80 + (digit - '0'));
  }
  return label;
}

std::string ContextKey(const ContextInfo& info, Scheme scheme) {
  switch (scheme) {
    case Scheme::kFrame:
      return info.frame;
    case Scheme::kFollowingSegment:
      return std::string(1, kHole) + info.following;
    case Scheme::kFollowingClass:
      return info.following_class;
    case Scheme::kPosition:
      return SlotLabel(info.slot);
    case Scheme::kTotal:
      return std::string(kTotalKey);
  }
  return {};
}

void ContrastMatrix::Add(const ContextInfo& info, Feature feature,
                         std::uint64_t weight, std::uint64_t pairs) {
  Column& col = columns_[ContextKey(info, meta_.scheme)];
  if (meta_.scheme == Scheme::kFrame && !col.info) col.info = info;
  Cell& c = col.cells[static_cast<std::size_t>(feature)];
  c.weighted_count += weight;
  c.pair_count += pairs;
}

void ContrastMatrix::Add(const std::string& key, Feature feature,
                         std::uint64_t weight, std::uint64_t pairs) {
  Cell& c = columns_[key].cells[static_cast<std::size_t>(feature)];
  c.weighted_count += weight;
  c.pair_count += pairs;
}

Cell ContrastMatrix::cell(std::string_view key, Feature feature) const {
  const auto it = columns_.find(key);
  if (it == columns_.end()) return {};
  return it->second.cells[static_cast<std::size_t>(feature)];
}

Cell ContrastMatrix::total(Feature feature) const {
  Cell sum;
  for (const auto& [key, col] : columns_) {
    const Cell& c = col.cells[static_cast<std::size_t>(feature)];
    sum.weighted_count += c.weighted_count;
    sum.pair_count += c.pair_count;
  }
  return sum;
}

bool operator==(const ContrastMatrix& a, const ContrastMatrix& b) {
  if (a.meta_.scheme != b.meta_.scheme) return false;
  if (a.columns_.size() != b.columns_.size()) return false;
  auto it = b.columns_.begin();
  for (const auto& [key, col] : a.columns_) {
    if (key != it->first || col.cells != it->second.cells) return false;
    ++it;
  }
  return true;
}

}  // namespace ptrac
