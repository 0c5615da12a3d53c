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

#include "ptrac/cli.h"

#include <algorithm>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptrac/core.h"
#include "ptrac/error.h"
#include "ptrac/inventory.h"
#include "ptrac/io.h"
#include "ptrac/lexicon.h"
#include "ptrac/oracle.h"
#include "ptrac/report.h"
#include "ptrac/syllabifier.h"
#include "ptrac/version.h"

namespace ptrac {
namespace {

struct Options {
  std::string inventory;
  std::string lexicon;
  std::vector<std::string> words;
  std::string study;
  std::string feature;
  std::string orientation = "unordered";
  std::string weighting = "type-frequency";
  std::string aggregate = "frame";
  std::string format = "csv";
  std::string out;
  std::string context;
  std::size_t witnesses = 3;
  bool strict = false;
  bool oracle = false;
};

struct Loaded {
  Inventory inventory;
  std::optional<LexiconParseResult> lexicon;
};

// Parsed inventory plus, when a path is given, the lexicon. Lexicon
// diagnostics go to `err`.
std::unique_ptr<Loaded> Load(const Options& opt, std::ostream& err) {
  auto loaded = std::make_unique<Loaded>(
      Loaded{Inventory::Parse(ReadTextFile(opt.inventory)), std::nullopt});
  if (!opt.lexicon.empty()) {
    loaded->lexicon = ParseLexicon(ReadTextFile(opt.lexicon), loaded->inventory,
                                   {.strict = opt.strict});
    for (const Diagnostic& d : loaded->lexicon->diagnostics) {
      err << opt.lexicon << ":" << d.line << ": " << d.message << "\n";
    }
  }
  return loaded;
}

StudyConfig MakeConfig(const Options& opt) {
  StudyConfig config;
  config.kind = *ParseStudyKind(opt.study);
  config.weighting = *ParseWeighting(opt.weighting);
  config.orientation = *ParseOrientation(opt.orientation);
  if (!opt.feature.empty()) config.feature = *ParseFeature(opt.feature);
  if (!opt.context.empty()) {
    config.context = ContextFilter{*ParseScheme(opt.aggregate), opt.context};
  }
  return config;
}

int RunSyllabify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.lexicon.empty() == opt.words.empty()) {
    err << "syllabify: give either --lexicon or words\n";
    return kExitUsage;
  }
  const auto loaded = Load(opt, err);
  const Inventory& inv = loaded->inventory;
  int status = kExitOk;
  if (loaded->lexicon) {
    if (!loaded->lexicon->diagnostics.empty()) status = kExitInvalid;
    for (const LexEntry& entry : loaded->lexicon->lexicon.entries()) {
      try {
        out << entry.orthography << '\t'
            << FormatSyllables(Syllabify(entry.transcription, inv), inv) << '\n';
      } catch (const SyllabificationError& e) {
        err << opt.lexicon << ":" << entry.line << ": " << e.what() << "\n";
        status = kExitInvalid;
      }
    }
    return status;
  }
  for (const std::string& word : opt.words) {
    try {
      out << FormatSyllables(Syllabify(TokenizeTranscription(word, inv), inv), inv)
          << '\n';
    } catch (const Error& e) {
      err << word << ": " << e.what() << "\n";
      status = kExitInvalid;
    }
  }
  return status;
}

int RunPairs(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = Load(opt, err);
  const Orientation orientation = *ParseOrientation(opt.orientation);
  std::vector<Feature> features(kFeatures.begin(), kFeatures.end());
  if (!opt.feature.empty()) features = {*ParseFeature(opt.feature)};
  for (Feature f : features) {
    for (const SymbolPair& p : loaded->inventory.FeaturalPairs(f, orientation)) {
      out << p.first << ' ' << p.second << ' ' << FeatureName(f) << '\n';
    }
  }
  return kExitOk;
}

void ReportExcluded(const Options& opt, const StudyReport& report, std::ostream& err) {
  for (const Diagnostic& d : report.diagnostics) {
    err << opt.lexicon << ":" << d.line << ": " << d.message << "\n";
  }
}

int RunAnalyze(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = Load(opt, err);
  const StudyConfig config = MakeConfig(opt);
  const StudyReport report =
      RunStudy(loaded->lexicon->lexicon, loaded->inventory, config);
  ReportExcluded(opt, report, err);
  if (opt.strict && !report.diagnostics.empty()) return kExitInvalid;

  if (opt.oracle) {
    const ContrastMatrix expected =
        oracle::OracleMatrix(loaded->lexicon->lexicon, loaded->inventory, report.config);
    if (!(expected == report.matrix)) {
      err << "oracle: engine matrix differs from the reference matrix\n";
      return kExitInvalid;
    }
    err << "oracle: matrices agree (" << report.matrix.columns().size() << " frames)\n";
  }

  RenderSpec spec;
  spec.format = *ParseFormat(opt.format);
  spec.scheme = *ParseScheme(opt.aggregate);
  if (!opt.out.empty()) spec.output = opt.out;
  RenderMetadata meta{report.config,
                      loaded->lexicon->diagnostics.size() + report.diagnostics.size(),
                      report.table.size(), report.pairs.size()};
  WriteDocument(RenderMatrix(report.matrix, spec, meta), spec, out);
  return kExitOk;
}

int RunListPairs(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto loaded = Load(opt, err);
  Options unfiltered = opt;
  unfiltered.feature.clear();
  unfiltered.context.clear();
  const StudyConfig config = MakeConfig(unfiltered);
  const Lexicon& lex = loaded->lexicon->lexicon;
  const StudyReport report = RunStudy(lex, loaded->inventory, config);
  ReportExcluded(opt, report, err);
  if (opt.strict && !report.diagnostics.empty()) return kExitInvalid;

  const ContextFilter filter{*ParseScheme(opt.aggregate), opt.context};
  const auto rows = ListPairsFor(report.pairs, *ParseFeature(opt.feature), filter,
                                 report.table, lex, opt.witnesses);
  const Inventory& inv = loaded->inventory;
  out << "context\tframe\tfirst\tsecond\tweight\twitnesses\n";
  for (const PairReportRow& row : rows) {
    out << row.context << '\t' << row.pair.context.frame << '\t'
        << Transcribe(row.pair.first, inv) << '\t' << Transcribe(row.pair.second, inv)
        << '\t' << row.pair.weight << '\t';
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
      if (i > 0) out << ' ';
      out << '(' << row.witnesses[i].first << ", " << row.witnesses[i].second << ')';
    }
    out << '\n';
  }
  return kExitOk;
}

std::vector<std::string> Names(std::initializer_list<std::string_view> names) {
  return {names.begin(), names.end()};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Tracks the dispersion of featural contrasts in a transcribed lexicon.",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Options opt;
  const auto features = CLI::IsMember(Names({"manner", "place", "voice"}));
  const auto orientations = CLI::IsMember(Names({"unordered", "ordered"}));
  const auto studies = CLI::IsMember(Names({"clusters", "positions"}));
  const auto weightings = CLI::IsMember(Names({"type-frequency", "unweighted"}));
  const auto schemes = CLI::IsMember(
      Names({"frame", "following-segment", "following-class", "position", "total"}));
  const auto formats = CLI::IsMember(Names({"csv", "json", "markdown", "md", "svg"}));

  auto add_inventory = [&](CLI::App* cmd) {
    cmd->add_option("--inventory", opt.inventory, "Inventory file")->required();
  };
  auto add_study = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", opt.lexicon, "Lexicon file (TSV)")->required();
    cmd->add_option("--study", opt.study, "clusters or positions")
        ->required()
        ->check(studies);
    cmd->add_option("--weighting", opt.weighting, "type-frequency or unweighted")
        ->check(weightings)
        ->capture_default_str();
    cmd->add_option("--orientation", opt.orientation, "unordered or ordered")
        ->check(orientations)
        ->capture_default_str();
    cmd->add_option("--aggregate", opt.aggregate, "Context scheme")
        ->check(schemes)
        ->capture_default_str();
    cmd->add_flag("--strict", opt.strict, "Treat lexicon diagnostics as fatal");
  };

  CLI::App* syllabify = app.add_subcommand("syllabify", "Syllabify words or a lexicon");
  add_inventory(syllabify);
  syllabify->add_option("--lexicon", opt.lexicon, "Lexicon file (TSV)");
  syllabify->add_option("words", opt.words, "Transcriptions");
  syllabify->add_flag("--strict", opt.strict, "Treat lexicon diagnostics as fatal");

  CLI::App* pairs = app.add_subcommand("pairs", "List featural minimal pairs");
  add_inventory(pairs);
  pairs->add_option("--feature", opt.feature, "manner, place or voice")->check(features);
  pairs->add_option("--orientation", opt.orientation, "unordered or ordered")
      ->check(orientations)
      ->capture_default_str();

  CLI::App* analyze = app.add_subcommand("analyze", "Compute the feature-context matrix");
  add_inventory(analyze);
  add_study(analyze);
  analyze->add_option("--feature", opt.feature, "Count only this feature")->check(features);
  analyze->add_option("--context", opt.context, "Count only this context (under --aggregate)");
  analyze->add_option("--format", opt.format, "csv, json, markdown or svg")
      ->check(formats)
      ->capture_default_str();
  analyze->add_option("--out", opt.out, "Output path (default: standard output)");
  analyze->add_flag("--oracle", opt.oracle, "Cross-check against the reference oracle")
      ->group("");

  CLI::App* list_pairs =
      app.add_subcommand("list-pairs", "List minimal sequence pairs for a feature and context");
  add_inventory(list_pairs);
  add_study(list_pairs);
  list_pairs->add_option("--feature", opt.feature, "manner, place or voice")
      ->required()
      ->check(features);
  list_pairs->add_option("--context", opt.context, "Context key under --aggregate")
      ->required();
  list_pairs->add_option("--witnesses", opt.witnesses, "Word pairs per row")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (syllabify->parsed()) return RunSyllabify(opt, out, err);
    if (pairs->parsed()) return RunPairs(opt, out, err);
    if (analyze->parsed()) return RunAnalyze(opt, out, err);
    if (list_pairs->parsed()) return RunListPairs(opt, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace ptrac
