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

#ifndef PTRAC_ORACLE_H_
#define PTRAC_ORACLE_H_

#include <cstddef>

#include "ptrac/inventory.h"
#include "ptrac/lexicon.h"
#include "ptrac/study.h"

namespace ptrac::oracle {

inline constexpr std::size_t kMaxDistinctSequences = 10000;

// Reference contrast matrix computed the slow, literal way: its own
// syllabification, naive frequency counts, every pair of distinct sequences
// compared at every index, keys built directly under `scheme`. It shares no
// code with the engine beyond the data types. Context filter keys in
// `config` must be canonical. Throws Error past kMaxDistinctSequences.
ContrastMatrix OracleMatrix(const Lexicon& lex, const Inventory& inv,
                            const StudyConfig& config,
                            Scheme scheme = Scheme::kFrame);

}  // namespace ptrac::oracle

#endif  // PTRAC_ORACLE_H_
