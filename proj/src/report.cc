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

#include "ptrac/report.h"

#include <algorithm>
#include <array>
#include <string>

#include <fmt/format.h>

#include "json.hpp"
#include "ptrac/core.h"
#include "ptrac/error.h"
#include "ptrac/io.h"
#include "ptrac/version.h"

namespace ptrac {
namespace {

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string MarkdownField(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string RenderCsv(const ContrastMatrix& m) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& [key, col] : m.columns()) {
    for (Feature f : kFeatures) {
      const Cell& c = col.cells[static_cast<std::size_t>(f)];
      out += fmt::format("{},{},{},{}\n", CsvField(key), FeatureName(f),
                         c.weighted_count, c.pair_count);
    }
  }
  return out;
}

std::string RenderMarkdown(const ContrastMatrix& m) {
  std::string out =
      "| context | feature | weighted_count | pair_count |\n"
      "|---|---|---:|---:|\n";
  for (const auto& [key, col] : m.columns()) {
    for (Feature f : kFeatures) {
      const Cell& c = col.cells[static_cast<std::size_t>(f)];
      out += fmt::format("| {} | {} | {} | {} |\n", MarkdownField(key),
                         FeatureName(f), c.weighted_count, c.pair_count);
    }
  }
  return out;
}

std::string RenderJson(const ContrastMatrix& m, const RenderMetadata& meta) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["tool"] = kToolName;
  doc["version"] = kVersion;
  ordered_json config;
  config["study"] = StudyKindName(m.meta().kind);
  config["weighting"] = WeightingName(m.meta().weighting);
  config["orientation"] = OrientationName(m.meta().orientation);
  config["aggregate"] = SchemeName(m.meta().scheme);
  if (meta.config) {
    config["feature_filter"] = meta.config->feature
                                   ? ordered_json(FeatureName(*meta.config->feature))
                                   : ordered_json(nullptr);
    if (meta.config->context) {
      config["context_filter"] = {
          {"scheme", SchemeName(meta.config->context->scheme)},
          {"key", meta.config->context->key}};
    } else {
      config["context_filter"] = nullptr;
    }
  }
  doc["config"] = std::move(config);
  doc["diagnostics"] = meta.diagnostics;
  doc["sequences"] = meta.sequences;
  doc["pairs"] = meta.pairs;
  ordered_json records = ordered_json::array();
  for (const auto& [key, col] : m.columns()) {
    for (Feature f : kFeatures) {
      const Cell& c = col.cells[static_cast<std::size_t>(f)];
      records.push_back({{"context", key},
                         {"feature", FeatureName(f)},
                         {"weighted_count", c.weighted_count},
                         {"pair_count", c.pair_count}});
    }
  }
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

constexpr std::array<std::string_view, 3> kBarColors = {"#4e79a7", "#f28e2b",
                                                        "#59a14f"};

}  // namespace

std::string_view FormatName(Format format) {
  switch (format) {
    case Format::kCsv: return "csv";
    case Format::kJson: return "json";
    case Format::kMarkdown: return "markdown";
    case Format::kSvg: return "svg";
  }
  return "?";
}

std::optional<Format> ParseFormat(std::string_view name) {
  for (Format f : {Format::kCsv, Format::kJson, Format::kMarkdown, Format::kSvg}) {
    if (FormatName(f) == name) return f;
  }
  if (name == "md") return Format::kMarkdown;
  return std::nullopt;
}

std::string RenderMatrix(const ContrastMatrix& matrix, const RenderSpec& spec,
                         const RenderMetadata& metadata) {
  const ContrastMatrix m = Aggregate(matrix, spec.scheme);
  switch (spec.format) {
    case Format::kCsv: return RenderCsv(m);
    case Format::kJson: return RenderJson(m, metadata);
    case Format::kMarkdown: return RenderMarkdown(m);
    case Format::kSvg: return RenderChart(m, spec);
  }
  return {};
}

std::string RenderChart(const ContrastMatrix& matrix, const RenderSpec& spec) {
  const ContrastMatrix m = Aggregate(matrix, spec.scheme);
  const std::size_t groups = m.columns().size();
  if (groups > kMaxChartColumns) {
    throw Error(fmt::format("{} contexts exceed the chart limit of {}; choose a coarser "
                            "aggregation",
                            groups, kMaxChartColumns));
  }

  constexpr int kBarWidth = 18;
  constexpr int kGroupGap = 18;
  constexpr int kGroupWidth = 3 * kBarWidth + kGroupGap;
  constexpr int kLeft = 72, kRight = 130, kTop = 40, kBottom = 64;
  constexpr int kPlotHeight = 260;
  constexpr int kTicks = 5;
  const int plot_width = std::max(static_cast<int>(groups) * kGroupWidth, 240);
  const int width = kLeft + plot_width + kRight;
  const int height = kTop + kPlotHeight + kBottom;
  const int base_y = kTop + kPlotHeight;

  std::uint64_t max_value = 0;
  for (const auto& [key, col] : m.columns()) {
    for (const Cell& c : col.cells) max_value = std::max(max_value, c.weighted_count);
  }
  const std::uint64_t step = std::max<std::uint64_t>(1, (max_value + kTicks - 1) / kTicks);
  const std::uint64_t axis_max = step * kTicks;
  auto y_of = [&](std::uint64_t v) {
    return base_y - static_cast<double>(v) * kPlotHeight / static_cast<double>(axis_max);
  };

  std::string svg = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n"
      "<text x=\"{2}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      "Contrasting features by {3}</text>\n",
      width, height, kLeft + plot_width / 2, XmlEscape(SchemeName(m.meta().scheme)));

  // Axes, ticks and grid.
  svg += "<g class=\"axes\" stroke=\"black\">\n";
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", kLeft, kTop,
                     base_y);
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", kLeft, base_y,
                     kLeft + plot_width);
  svg += "</g>\n<g class=\"ticks\">\n";
  for (int t = 0; t <= kTicks; ++t) {
    const std::uint64_t value = step * static_cast<std::uint64_t>(t);
    const double y = y_of(value);
    svg += fmt::format(
        "<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"#dddddd\"/>\n"
        "<text x=\"{3}\" y=\"{4:.2f}\" text-anchor=\"end\">{5}</text>\n",
        kLeft, y, kLeft + plot_width, kLeft - 6, y + 4, value);
  }
  svg += "</g>\n";
  svg += fmt::format(
      "<text x=\"{0}\" y=\"{1}\" text-anchor=\"middle\">context ({2})</text>\n"
      "<text x=\"18\" y=\"{3}\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 18 {3})\">weighted count</text>\n",
      kLeft + plot_width / 2, height - 14, XmlEscape(SchemeName(m.meta().scheme)),
      kTop + kPlotHeight / 2);

  // Bars.
  svg += "<g class=\"bars\">\n";
  int group = 0;
  for (const auto& [key, col] : m.columns()) {
    const int gx = kLeft + kGroupGap / 2 + group * kGroupWidth;
    svg += fmt::format("<g class=\"group\" data-context=\"{}\">\n", XmlEscape(key));
    for (Feature f : kFeatures) {
      const auto fi = static_cast<std::size_t>(f);
      const std::uint64_t v = col.cells[fi].weighted_count;
      const double y = y_of(v);
      svg += fmt::format(
          "<rect class=\"bar\" data-feature=\"{0}\" x=\"{1}\" y=\"{2:.2f}\" width=\"{3}\" "
          "height=\"{4:.2f}\" fill=\"{5}\"><title>{6} {0}: {7}</title></rect>\n",
          FeatureName(f), gx + static_cast<int>(fi) * kBarWidth, y, kBarWidth, base_y - y,
          kBarColors[fi], XmlEscape(key), v);
    }
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       gx + 3 * kBarWidth / 2, base_y + 18, XmlEscape(key));
    svg += "</g>\n";
    ++group;
  }
  svg += "</g>\n";

  // Legend.
  svg += "<g class=\"legend\">\n";
  for (Feature f : kFeatures) {
    const auto fi = static_cast<int>(f);
    const int ly = kTop + 10 + fi * 20;
    svg += fmt::format(
        "<rect x=\"{0}\" y=\"{1}\" width=\"12\" height=\"12\" fill=\"{2}\"/>\n"
        "<text x=\"{3}\" y=\"{4}\">{5}</text>\n",
        kLeft + plot_width + 16, ly, kBarColors[static_cast<std::size_t>(fi)],
        kLeft + plot_width + 34, ly + 10, FeatureName(f));
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void WriteDocument(std::string_view document, const RenderSpec& spec,
                   std::ostream& out) {
  if (spec.output) {
    WriteTextFile(*spec.output, document);
    return;
  }
  out << document;
  out.flush();
  if (!out) throw IoError("error writing to standard output");
}

}  // namespace ptrac
