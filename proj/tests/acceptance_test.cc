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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ptrac/cli.h"
#include "ptrac/core.h"
#include "ptrac/io.h"
#include "ptrac/oracle.h"
#include "ptrac/syllabifier.h"
#include "test_support.h"

namespace ptrac {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void Expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int Cli(std::vector<std::string> args, std::string* out) {
  std::ostringstream o, e;
  const int code = RunCli(args, o, e);
  if (out != nullptr) *out = o.str();
  return code;
}

std::set<SymbolPair> ParsePairLines(const std::string& text, const std::string& feature) {
  std::set<SymbolPair> pairs;
  std::istringstream in(text);
  std::string a, b, f;
  while (in >> a >> b >> f) {
    if (f == feature) pairs.insert({a, b});
  }
  return pairs;
}

std::size_t CountLines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

void ReferencePairList(Check& c) {
  const std::string inv = testing::PersianInventoryPath();
  std::string ordered, unordered;
  c.Expect(Cli({"pairs", "--inventory", inv, "--orientation", "ordered"}, &ordered) == 0,
           "pairs --orientation ordered failed");
  c.Expect(Cli({"pairs", "--inventory", inv, "--orientation", "unordered"}, &unordered) == 0,
           "pairs --orientation unordered failed");
  const struct {
    const char* name;
    std::string_view row;
    std::size_t ordered, unordered;
  } rows[] = {{"manner", testing::kReferenceManner, 70, 35},
              {"place", testing::kReferencePlace, 50, 25},
              {"voice", testing::kReferenceVoice, 20, 10}};
  std::size_t total_ordered = 0, total_unordered = 0;
  for (const auto& row : rows) {
    const auto expected = testing::ReferencePairs(row.row);
    const std::set<SymbolPair> want(expected.begin(), expected.end());
    const auto got = ParsePairLines(ordered, row.name);
    c.Expect(want.size() == row.ordered, std::string(row.name) + ": reference list size");
    c.Expect(got.size() == row.ordered, std::string(row.name) + ": ordered count");
    c.Expect(got == want, std::string(row.name) + ": ordered pairs differ from the table");
    const auto un = ParsePairLines(unordered, row.name);
    c.Expect(un.size() == row.unordered, std::string(row.name) + ": unordered count");
    for (const auto& p : un) {
      c.Expect(want.count(p) == 1 && want.count({p.second, p.first}) == 1,
               std::string(row.name) + ": unordered pair not in table");
    }
    total_ordered += row.ordered;
    total_unordered += row.unordered;
  }
  c.Expect(CountLines(ordered) == total_ordered, "extra ordered lines");
  c.Expect(CountLines(unordered) == total_unordered, "extra unordered lines");
}

void ClusterFixture(Check& c) {
  const Inventory& inv = testing::Persian();
  const StudyReport report = RunStudy(testing::Fixture(), inv, StudyConfig{});
  c.Expect(report.diagnostics.empty(), "fixture produced diagnostics");
  const ContrastMatrix by_segment = Aggregate(report.matrix, Scheme::kFollowingSegment);
  std::set<std::string> voice_contexts;
  for (const auto& [key, column] : by_segment.columns()) {
    if (column.cells[static_cast<int>(Feature::kVoice)].weighted_count > 0) {
      voice_contexts.insert(key);
    }
  }
  c.Expect(voice_contexts == std::set<std::string>{"_l", "_m", "_r", "_n"},
           "voice contexts are not exactly {_l,_m,_r,_n}");
  for (const std::string& key : voice_contexts) {
    const auto id = inv.Find(key.substr(1));
    const std::string cls = id ? std::string(inv.FollowingClass(*id)) : std::string();
    c.Expect(cls == kClassNasal || cls == kClassLiquid, key + " is not before a nasal or liquid");
  }
  const std::pair<const char*, std::uint64_t> expected[] = {
      {"_r", 5}, {"_n", 1}, {"_l", 2}, {"_m", 1}};
  for (const auto& [key, weight] : expected) {
    c.Expect(by_segment.cell(key, Feature::kVoice).weighted_count == weight,
             std::string(key) + " voice weight");
  }
  const ContrastMatrix oracle_matrix =
      oracle::OracleMatrix(testing::Fixture(), inv, StudyConfig{}, Scheme::kFollowingSegment);
  c.Expect(oracle_matrix == by_segment, "engine and oracle disagree on the fixture");
}

void OracleEquivalence(Check& c) {
  for (std::uint64_t seed = 0; seed < 100 && c.ok; ++seed) {
    const auto world = testing::RandomWorld(seed);
    for (StudyKind kind : {StudyKind::kClusters, StudyKind::kPositions}) {
      for (Weighting w : {Weighting::kTypeFrequency, Weighting::kUnweighted}) {
        for (Orientation o : {Orientation::kUnordered, Orientation::kOrdered}) {
          StudyConfig cfg;
          cfg.kind = kind;
          cfg.weighting = w;
          cfg.orientation = o;
          const ContrastMatrix engine = RunStudy(*world.lexicon, *world.inventory, cfg).matrix;
          const ContrastMatrix reference =
              oracle::OracleMatrix(*world.lexicon, *world.inventory, cfg);
          c.Expect(engine == reference, "mismatch at seed " + std::to_string(seed) + " " +
                                            std::string(StudyKindName(kind)) + " " +
                                            std::string(WeightingName(w)) + " " +
                                            std::string(OrientationName(o)));
        }
      }
    }
  }
}

// Faults read off a C/V pattern without running the syllabifier.
std::set<SyllabificationFault> PatternFaults(const std::string& p) {
  std::set<SyllabificationFault> faults;
  const auto first_v = p.find('V');
  if (first_v == std::string::npos) return {SyllabificationFault::kNoNucleus};
  if (first_v == 0) faults.insert(SyllabificationFault::kVowelInitial);
  if (first_v > 1) faults.insert(SyllabificationFault::kOnsetCluster);
  if (p.find("VV") != std::string::npos) faults.insert(SyllabificationFault::kAdjacentVowels);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.compare(i, 5, "VCCCC") == 0 && p.find('V', i + 1) != std::string::npos) {
      faults.insert(SyllabificationFault::kCodaTooLong);
    }
  }
  if (p.size() - p.rfind('V') - 1 >= 3) faults.insert(SyllabificationFault::kCodaTooLong);
  return faults;
}

void SyllabifierProperties(Check& c) {
  const Inventory& inv = testing::Persian();
  const auto cons = inv.consonants();
  const auto vows = inv.vowels();
  for (std::size_t len = 1; len <= 8; ++len) {
    for (std::size_t bits = 0; bits < (1u << len); ++bits) {
      std::string pattern;
      for (std::size_t i = 0; i < len; ++i) pattern += (bits >> i) & 1 ? 'V' : 'C';
      const auto faults = PatternFaults(pattern);
      // Several instantiations per pattern, cycling through the inventory.
      for (std::size_t shift = 0; shift < 4; ++shift) {
        Sequence seq;
        for (std::size_t i = 0; i < len; ++i) {
          seq.push_back(pattern[i] == 'C' ? cons[(i * 7 + shift * 5 + bits) % cons.size()]
                                          : vows[(i + shift + bits) % vows.size()]);
        }
        try {
          const auto syllables = Syllabify(seq, inv);
          c.Expect(faults.empty(), pattern + " accepted but should fail");
          Sequence flat;
          for (const Syllable& s : syllables) {
            const auto ph = s.phonemes();
            flat.insert(flat.end(), ph.begin(), ph.end());
            c.Expect(inv.IsConsonant(s.onset) && inv.IsVowel(s.nucleus) && s.coda.size() <= 2,
                     pattern + " has a syllable outside CV/CVC/CVCC");
          }
          c.Expect(flat == seq, pattern + " does not reconstruct");
        } catch (const SyllabificationError& e) {
          c.Expect(!faults.empty() && e.fault() == *faults.begin(),
                   pattern + " rejected with the wrong fault");
        }
      }
    }
  }
  for (PhonemeId c1 : cons) {
    for (PhonemeId v : vows) {
      const PhonemeId c2 = cons[(c1 + 3) % cons.size()];
      const PhonemeId c3 = cons[(c1 + 9) % cons.size()];
      const auto five = Syllabify(Sequence{c1, v, c2, c3, c1, v}, inv);
      c.Expect(five.size() == 2 && five[0].shape() == SyllableShape::kCVCC &&
                   five[1].shape() == SyllableShape::kCV,
               "CVCCCV is not CVCC.CV");
      const auto open = Syllabify(Sequence{c1, v, c2, v}, inv);
      c.Expect(open.size() == 2 && open[0].shape() == SyllableShape::kCV &&
                   open[1].shape() == SyllableShape::kCV,
               "CVCV is not CV.CV");
    }
  }
}

void CountingContracts(Check& c) {
  for (std::uint64_t seed = 1000; seed < 1020; ++seed) {
    const auto world = testing::RandomWorld(seed);
    for (StudyKind kind : {StudyKind::kClusters, StudyKind::kPositions}) {
      StudyConfig cfg;
      cfg.kind = kind;
      const auto unordered = RunStudy(*world.lexicon, *world.inventory, cfg).matrix;
      cfg.orientation = Orientation::kOrdered;
      const auto ordered = RunStudy(*world.lexicon, *world.inventory, cfg).matrix;
      cfg.orientation = Orientation::kUnordered;
      cfg.weighting = Weighting::kUnweighted;
      const auto unweighted = RunStudy(*world.lexicon, *world.inventory, cfg).matrix;
      c.Expect(ordered.columns().size() == unordered.columns().size(), "column sets differ");
      for (const auto& [key, column] : unordered.columns()) {
        for (Feature f : kFeatures) {
          const Cell u = column.cells[static_cast<int>(f)];
          const Cell o = ordered.cell(key, f);
          const Cell w = unweighted.cell(key, f);
          c.Expect(o.weighted_count == 2 * u.weighted_count && o.pair_count == 2 * u.pair_count,
                   "ordered is not twice unordered at " + key);
          c.Expect(w.weighted_count <= u.weighted_count, "unweighted exceeds weighted at " + key);
        }
      }
    }
  }
  const Inventory& inv = testing::Persian();
  Lexicon lex(inv);
  const Sequence band = TokenizeTranscription("band", inv);
  const Sequence pand = TokenizeTranscription("pand", inv);
  for (int i = 0; i < 200; ++i) lex.Add({"band" + std::to_string(i), band});
  for (int i = 0; i < 300; ++i) lex.Add({"pand" + std::to_string(i), pand});
  StudyConfig cfg;
  cfg.kind = StudyKind::kPositions;
  const auto m = RunStudy(lex, inv, cfg).matrix;
  c.Expect(m.cell("_and", Feature::kVoice) == Cell{200, 1}, "worked example is not 200 at _and");
}

void Determinism(Check& c) {
  const auto dir = std::filesystem::temp_directory_path() / "ptrac_acceptance";
  std::filesystem::create_directories(dir);
  for (const char* format : {"csv", "svg"}) {
    std::string docs[2];
    for (int run = 0; run < 2; ++run) {
      const auto path = dir / ("run" + std::to_string(run) + "." + format);
      c.Expect(Cli({"analyze", "--inventory", testing::PersianInventoryPath(), "--lexicon",
                    testing::FixturePath(), "--study", "clusters", "--aggregate",
                    "following-segment", "--format", format, "--out", path.string()},
                   nullptr) == 0,
               std::string("analyze --format ") + format + " failed");
      docs[run] = ReadTextFile(path);
    }
    c.Expect(!docs[0].empty() && docs[0] == docs[1],
             std::string(format) + " output differs between runs");
  }
  std::filesystem::remove_all(dir);
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace
}  // namespace ptrac

int main() {
  using namespace ptrac;
  const Criterion criteria[] = {
      {"1 featural minimal pairs of the inventory", 1.0, ReferencePairList},
      {"2 cluster fixture voice contexts", 1.0, ClusterFixture},
      {"3 engine equals oracle on random lexicons", 60.0, OracleEquivalence},
      {"4 syllabifier patterns and schema cases", 10.0, SyllabifierProperties},
      {"5 counting contracts", 1.0, CountingContracts},
      {"6 deterministic analyze output", 0.0, Determinism},
  };
  int failures = 0;
  for (const Criterion& crit : criteria) {
    Check check;
    const auto start = Clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (crit.limit_seconds > 0 && seconds >= crit.limit_seconds) {
      check.Expect(false, "took longer than the limit");
    }
    std::ostringstream line;
    line << (check.ok ? "PASS" : "FAIL") << " criterion " << crit.name << " ("
         << static_cast<long>(seconds * 1000) << " ms)";
    if (!check.ok) line << ": " << check.detail;
    std::cout << line.str() << "\n";
    if (!check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
