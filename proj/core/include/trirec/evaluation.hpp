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

#include <map>

#include "trirec/ingest.hpp"
#include "trirec/metrics.hpp"
#include "trirec/recommender.hpp"

namespace trirec {

enum class SplitStrategy : std::uint8_t { MostRecent, SeededRandom };

std::string_view to_string(SplitStrategy strategy);
std::optional<SplitStrategy> parse_split_strategy(std::string_view token);

/// Leave-n-out holdout settings. Entities of the use case's target
/// kind qualify once they have at least min_interactions DISTINCT
/// candidates; holdout of those candidates are withheld per target.
/// min_interactions > holdout guarantees at least one training
/// interaction.
struct SplitConfig {
    std::size_t min_interactions = 11;
    std::size_t holdout = 10;
    SplitStrategy strategy = SplitStrategy::MostRecent;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless
    /// min_interactions > holdout >= 1.
    void validate() const;
};

/// Train store plus the withheld candidate sets, both over the use
/// case's edge slice. Withholding a candidate removes every edge
/// between the target and that candidate, so nothing in a test set is
/// reachable from its target in `train`.
struct SplitResult {
    InteractionStore train;
    std::map<EntityRef, std::vector<EntityRef>> test_sets;  // values sorted by id
    UseCase use_case = UseCase::UC1;
    SplitStrategy strategy = SplitStrategy::MostRecent;
};

/// Picks MostRecent when every relevant-slice edge is timestamped,
/// SeededRandom otherwise (projected edges carry no timestamps).
SplitStrategy choose_strategy(const InteractionStore& slice);

/// Splits the use case's relevant slice of `store`.
///
/// MostRecent withholds the candidates with the newest interaction
/// (recency = max timestamp over the target's edges to the candidate,
/// missing timestamps oldest; ties by id). SeededRandom withholds a
/// uniform sample, derived per target from (seed, target id) so the
/// result is independent of iteration and parallel schedule.
SplitResult split(const InteractionStore& store, UseCase uc, const SplitConfig& config);

/// Outcome of one (use case, algorithm) evaluation with full
/// provenance.
struct EvaluationRun {
    UseCase use_case = UseCase::UC1;
    RecommendationProfile profile;
    SplitConfig config;              // strategy as actually used
    StoreStatistics input_stats;     // of the input store
    StoreStatistics slice_stats;     // of the evaluated slice
    MetricReport metrics;
};

/// Split, recommend from the train store per evaluated target, score
/// against the withheld sets, aggregate. Per-target work may run on
/// `threads` workers; the result is schedule-independent. A report
/// with n_cases 0 (no qualifying target) is valid output, its metric
/// values are undefined-flagged via MetricReport::defined().
EvaluationRun run_evaluation(const InteractionStore& store, UseCase uc,
                             const RecommendationProfile& profile, const SplitConfig& config,
                             unsigned threads = 0);

}  // namespace trirec
