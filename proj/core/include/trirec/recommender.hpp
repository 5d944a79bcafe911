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

#include "trirec/similarity.hpp"
#include "trirec/store.hpp"

namespace trirec {

/// The four recommendation directions of a tripartite data market.
///   UC1: datasets for users      (raw user/dataset edges)
///   UC2: services for users      (raw user/service edges)
///   UC3: datasets for services   (dataset/service network)
///   UC4: services for datasets   (dataset/service network)
enum class UseCase : std::uint8_t { UC1 = 1, UC2 = 2, UC3 = 3, UC4 = 4 };

constexpr std::array<UseCase, 4> kAllUseCases = {UseCase::UC1, UseCase::UC2, UseCase::UC3,
                                                 UseCase::UC4};

constexpr EntityKind target_kind_of(UseCase uc) {
    switch (uc) {
        case UseCase::UC1:
        case UseCase::UC2: return EntityKind::User;
        case UseCase::UC3: return EntityKind::Service;
        case UseCase::UC4: return EntityKind::Dataset;
    }
    return EntityKind::User;
}

constexpr EntityKind candidate_kind_of(UseCase uc) {
    switch (uc) {
        case UseCase::UC1:
        case UseCase::UC3: return EntityKind::Dataset;
        case UseCase::UC2:
        case UseCase::UC4: return EntityKind::Service;
    }
    return EntityKind::Dataset;
}

/// Edge slice a use case reads: raw User->X for UC1/UC2, the
/// dataset/service network for UC3/UC4.
constexpr EdgeType edge_type_of(UseCase uc) {
    switch (uc) {
        case UseCase::UC1: return EdgeType::UserDataset;
        case UseCase::UC2: return EdgeType::UserService;
        case UseCase::UC3:
        case UseCase::UC4: return EdgeType::DatasetService;
    }
    return EdgeType::UserDataset;
}

std::string_view to_string(UseCase uc);
std::optional<UseCase> parse_use_case(std::string_view token);

/// Resolves the store slice a use case operates on. UC1/UC2 take the
/// matching raw edges. UC3/UC4 take the store's explicit
/// dataset/service edges when it has any (e.g. a projected file loaded
/// back, which may carry timestamps); otherwise the projection is
/// computed from the raw user edges.
InteractionStore relevant_slice(const InteractionStore& store, UseCase uc);

/// True when `store` already is the relevant slice for `uc`, so
/// recommenders can use it without copying.
bool is_relevant_slice(const InteractionStore& store, UseCase uc);

enum class Algorithm : std::uint8_t { MostPopular, CollaborativeFiltering };

std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view token);

/// Parameter bundle governing one algorithm's behavior; held per
/// algorithm and adjustable at runtime through the service.
struct RecommendationProfile {
    Algorithm algorithm = Algorithm::MostPopular;
    std::size_t k = 10;
    std::size_t neighborhood_size = 20;
    SimilarityMeasure similarity = SimilarityMeasure::Cosine;
    bool filter_seen = false;

    /// Throws std::invalid_argument unless k >= 1 and
    /// neighborhood_size >= 1.
    void validate() const;
};

RecommendationProfile default_profile(Algorithm algorithm);

struct ScoredEntity {
    EntityRef entity;
    double score;

    friend bool operator==(const ScoredEntity& a, const ScoredEntity& b) {
        return a.entity == b.entity && a.score == b.score;
    }
};

/// Ranked top-k list: scores non-increasing, entries distinct, all of
/// the use case's candidate kind.
using RankedList = std::vector<ScoredEntity>;

struct Recommendation {
    RankedList entries;
    /// Set when a cold-start target was served the most-popular list
    /// instead of a personalized one.
    bool fallback = false;
};

/// Most-popular baseline over a pre-sliced store. Candidates are
/// ranked by the number of slice interactions they take part in
/// (ties broken by id); every target receives the same list.
class MostPopularModel {
public:
    /// `slice` must outlive the model and satisfy
    /// is_relevant_slice(slice, uc).
    MostPopularModel(const InteractionStore& slice, UseCase uc,
                     const RecommendationProfile& profile);

    const RankedList& list() const { return list_; }
    Recommendation recommend() const { return Recommendation{list_, false}; }

private:
    RankedList list_;
};

/// Neighborhood collaborative filtering over a pre-sliced store.
///
/// Entities of the target kind are compared through their binary
/// candidate profiles; a target's candidates are scored by the summed
/// similarity of the top neighbors that interacted with them. Targets
/// without any slice interactions fall back to the most-popular list.
class CollaborativeFilteringModel {
public:
    /// `slice` must outlive the model and satisfy
    /// is_relevant_slice(slice, uc).
    CollaborativeFilteringModel(const InteractionStore& slice, UseCase uc,
                                const RecommendationProfile& profile);

    Recommendation recommend(const EntityRef& target) const;

    /// All positive candidate scores for `target` without seen-item
    /// filtering or truncation, keyed by candidate id. Used by the
    /// oracle-equivalence checks.
    std::vector<std::pair<std::string, double>> raw_scores(const EntityRef& target) const;

private:
    struct Scored;
    std::vector<Scored> score_candidates(std::uint32_t target_row) const;

    const InteractionStore* slice_;
    UseCase uc_;
    RecommendationProfile profile_;
    MostPopularModel fallback_;
    // target-kind entities sorted by id; profiles_ hold sorted distinct
    // candidate handles per row
    std::vector<InteractionStore::Handle> targets_;
    std::vector<std::vector<std::uint32_t>> profiles_;
    std::unordered_map<InteractionStore::Handle, std::uint32_t> row_of_;
};

/// One-shot conveniences. They slice the store themselves when it is
/// not already the relevant slice; batch callers should build a model
/// over relevant_slice() once instead.
RankedList recommend_mp(const InteractionStore& store, UseCase uc,
                        const RecommendationProfile& profile);
Recommendation recommend_cf(const InteractionStore& store, UseCase uc, const EntityRef& target,
                            const RecommendationProfile& profile);

}  // namespace trirec
