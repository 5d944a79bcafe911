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

#include "trirec/recommender.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trirec {

std::string_view to_string(UseCase uc) {
    switch (uc) {
        case UseCase::UC1: return "uc1";
        case UseCase::UC2: return "uc2";
        case UseCase::UC3: return "uc3";
        case UseCase::UC4: return "uc4";
    }
    return "?";
}

std::optional<UseCase> parse_use_case(std::string_view token) {
    if (token == "uc1" || token == "UC1") return UseCase::UC1;
    if (token == "uc2" || token == "UC2") return UseCase::UC2;
    if (token == "uc3" || token == "UC3") return UseCase::UC3;
    if (token == "uc4" || token == "UC4") return UseCase::UC4;
    return std::nullopt;
}

std::string_view to_string(Algorithm algorithm) {
    return algorithm == Algorithm::MostPopular ? "mp" : "cf";
}

std::optional<Algorithm> parse_algorithm(std::string_view token) {
    if (token == "mp" || token == "MP") return Algorithm::MostPopular;
    if (token == "cf" || token == "CF") return Algorithm::CollaborativeFiltering;
    return std::nullopt;
}

void RecommendationProfile::validate() const {
    if (k < 1) throw std::invalid_argument("profile: k must be >= 1");
    if (neighborhood_size < 1) {
        throw std::invalid_argument("profile: neighborhood_size must be >= 1");
    }
}

RecommendationProfile default_profile(Algorithm algorithm) {
    RecommendationProfile profile;
    profile.algorithm = algorithm;
    profile.filter_seen = (algorithm == Algorithm::CollaborativeFiltering);
    return profile;
}

InteractionStore relevant_slice(const InteractionStore& store, UseCase uc) {
    EdgeType type = edge_type_of(uc);
    if (type == EdgeType::DatasetService && store.edge_type_count(type) == 0) {
        return project_dataset_service(store);
    }
    return slice_edges(store, type);
}

bool is_relevant_slice(const InteractionStore& store, UseCase uc) {
    return store.pure_edge_type(edge_type_of(uc));
}

MostPopularModel::MostPopularModel(const InteractionStore& slice, UseCase uc,
                                   const RecommendationProfile& profile) {
    profile.validate();
    EdgeType type = edge_type_of(uc);
    struct Candidate {
        InteractionStore::Handle handle;
        std::size_t count;
    };
    std::vector<Candidate> candidates;
    for (auto h : slice.entities_by_id(candidate_kind_of(uc))) {
        std::size_t count = slice.pair_degree(h, type);
        if (count > 0) candidates.push_back({h, count});
    }
    // candidates are id-sorted already; a stable sort on the count
    // keeps the lexicographic tie-break
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.count > b.count; });
    if (candidates.size() > profile.k) candidates.resize(profile.k);
    list_.reserve(candidates.size());
    for (const Candidate& c : candidates) {
        list_.push_back(ScoredEntity{slice.entity(c.handle), static_cast<double>(c.count)});
    }
}

struct CollaborativeFilteringModel::Scored {
    InteractionStore::Handle handle;
    double score;
};

CollaborativeFilteringModel::CollaborativeFilteringModel(const InteractionStore& slice, UseCase uc,
                                                         const RecommendationProfile& profile)
    : slice_(&slice), uc_(uc), profile_(profile), fallback_(slice, uc, profile) {
    profile_.validate();
    EdgeType type = edge_type_of(uc);
    targets_ = slice.entities_by_id(target_kind_of(uc));
    profiles_.reserve(targets_.size());
    row_of_.reserve(targets_.size());
    for (std::uint32_t row = 0; row < targets_.size(); ++row) {
        profiles_.push_back(slice.partners(targets_[row], type));
        row_of_.emplace(targets_[row], row);
    }
}

std::vector<CollaborativeFilteringModel::Scored> CollaborativeFilteringModel::score_candidates(
    std::uint32_t target_row) const {
    const auto& own = profiles_[target_row];

    struct Neighbor {
        std::uint32_t row;
        double sim;
    };
    std::vector<Neighbor> neighbors;
    for (std::uint32_t row = 0; row < targets_.size(); ++row) {
        if (row == target_row) continue;
        double sim = detail::similarity_sorted(own, profiles_[row], profile_.similarity);
        if (sim > 0.0) neighbors.push_back({row, sim});
    }
    auto closer = [this](const Neighbor& a, const Neighbor& b) {
        if (a.sim != b.sim) return a.sim > b.sim;
        return slice_->entity(targets_[a.row]).id < slice_->entity(targets_[b.row]).id;
    };
    if (neighbors.size() > profile_.neighborhood_size) {
        std::partial_sort(neighbors.begin(), neighbors.begin() + profile_.neighborhood_size,
                          neighbors.end(), closer);
        neighbors.resize(profile_.neighborhood_size);
    } else {
        std::sort(neighbors.begin(), neighbors.end(), closer);
    }

    // Candidate scores accumulate in neighbor order, so the float sum
    // is schedule-independent.
    std::unordered_map<InteractionStore::Handle, double> score;
    for (const Neighbor& n : neighbors) {
        for (std::uint32_t candidate : profiles_[n.row]) {
            score[candidate] += n.sim;
        }
    }
    std::vector<Scored> out;
    out.reserve(score.size());
    for (auto [handle, s] : score) out.push_back({handle, s});
    return out;
}

Recommendation CollaborativeFilteringModel::recommend(const EntityRef& target) const {
    auto handle = slice_->find(target);
    auto row = handle ? row_of_.find(*handle) : row_of_.end();
    if (!handle || row == row_of_.end() || profiles_[row->second].empty()) {
        Recommendation rec = fallback_.recommend();
        rec.fallback = true;
        return rec;
    }

    auto scored = score_candidates(row->second);
    const auto& own = profiles_[row->second];
    if (profile_.filter_seen) {
        std::erase_if(scored, [&own](const Scored& s) {
            return std::binary_search(own.begin(), own.end(), s.handle);
        });
    }
    EdgeType type = edge_type_of(uc_);
    std::sort(scored.begin(), scored.end(), [this, type](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        std::size_t pa = slice_->pair_degree(a.handle, type);
        std::size_t pb = slice_->pair_degree(b.handle, type);
        if (pa != pb) return pa > pb;
        return slice_->entity(a.handle).id < slice_->entity(b.handle).id;
    });
    if (scored.size() > profile_.k) scored.resize(profile_.k);

    Recommendation rec;
    rec.entries.reserve(scored.size());
    for (const Scored& s : scored) {
        rec.entries.push_back(ScoredEntity{slice_->entity(s.handle), s.score});
    }
    return rec;
}

std::vector<std::pair<std::string, double>> CollaborativeFilteringModel::raw_scores(
    const EntityRef& target) const {
    auto handle = slice_->find(target);
    auto row = handle ? row_of_.find(*handle) : row_of_.end();
    if (!handle || row == row_of_.end()) return {};
    auto scored = score_candidates(row->second);
    std::vector<std::pair<std::string, double>> out;
    out.reserve(scored.size());
    for (const Scored& s : scored) out.emplace_back(slice_->entity(s.handle).id, s.score);
    std::sort(out.begin(), out.end());
    return out;
}

RankedList recommend_mp(const InteractionStore& store, UseCase uc,
                        const RecommendationProfile& profile) {
    if (is_relevant_slice(store, uc)) return MostPopularModel(store, uc, profile).list();
    InteractionStore slice = relevant_slice(store, uc);
    return MostPopularModel(slice, uc, profile).list();
}

Recommendation recommend_cf(const InteractionStore& store, UseCase uc, const EntityRef& target,
                            const RecommendationProfile& profile) {
    if (is_relevant_slice(store, uc)) {
        return CollaborativeFilteringModel(store, uc, profile).recommend(target);
    }
    InteractionStore slice = relevant_slice(store, uc);
    return CollaborativeFilteringModel(slice, uc, profile).recommend(target);
}

}  // namespace trirec
