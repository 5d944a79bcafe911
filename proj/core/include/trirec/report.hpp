// Copyright 2026 The trirec Authors.
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

#pragma once

#include <span>
#include <string>

#include "trirec/evaluation.hpp"

namespace trirec {

/// Key-value statistics block, one line per Table-1 row.
std::string render_statistics(const StoreStatistics& stats);

/// Fixed-width evaluation table, one row per (use case, algorithm),
/// columns P@1, F1@5, R@10, MRR@10 in both variants, MAP@10, nDCG@10
/// at three decimals. Within a use case the winning row is marked in
/// the `best` column (by nDCG@10, then MAP@10, then the remaining
/// columns). Undefined metrics (n_cases = 0) print as "n/a". Output is
/// byte-stable for identical runs.
std::string render_table(std::span<const EvaluationRun> runs);

/// Same content as a JSON document with full-precision values and
/// provenance (profile, split config, seed, store statistics).
std::string render_json(std::span<const EvaluationRun> runs);

/// One-line MetricReport rendering in Table-3 column order.
std::string render_metrics_row(const MetricReport& metrics);

}  // namespace trirec
