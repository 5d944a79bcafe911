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

#include "trirec/evaluation.hpp"

#include <algorithm>
#include <thread>

#include "trirec/det_random.hpp"

namespace trirec {

std::string_view to_string(SplitStrategy strategy) {
    return strategy == SplitStrategy::MostRecent ? "recent" : "random";
}

std::optional<SplitStrategy> parse_split_strategy(std::string_view token) {
    if (token == "recent" || token == "most-recent") return SplitStrategy::MostRecent;
    if (token == "random" || token == "seeded-random") return SplitStrategy::SeededRandom;
    return std::nullopt;
}

void SplitConfig::validate() const {
    if (holdout < 1) throw std::invalid_argument("split: holdout must be >= 1");
    if (min_interactions <= holdout) {
        throw std::invalid_argument(
            "split: min_interactions must exceed holdout (at least one training interaction)");
    }
}

SplitStrategy choose_strategy(const InteractionStore& slice) {
    for (const auto& edge : slice.edges()) {
        if (!edge.timestamp) return SplitStrategy::SeededRandom;
    }
    if (slice.interaction_count() == 0) return SplitStrategy::SeededRandom;
    return SplitStrategy::MostRecent;
}

namespace {

using Handle = InteractionStore::Handle;

/// Candidates a target loses to its test set, chosen per config.
std::vector<Handle> withheld_candidates(const InteractionStore& slice, Handle target,
                                        const std::vector<Handle>& candidates, EdgeType type,
                                        const SplitConfig& config) {
    std::vector<Handle> picked(candidates);
    if (config.strategy == SplitStrategy::MostRecent) {
        // recency = newest edge between target and candidate; absent
        // timestamps sort oldest
        std::unordered_map<Handle, std::int64_t> recency;
        recency.reserve(candidates.size());
        bool target_is_source = slice.entity(target).kind == source_kind_of(type);
        for (std::size_t i = 0; i < slice.interaction_count(); ++i) {
            const auto& edge = slice.edges()[i];
            if (edge.type != type) continue;
            Handle t = target_is_source ? edge.source : edge.target;
            if (t != target) continue;
            Handle c = target_is_source ? edge.target : edge.source;
            std::int64_t ts = edge.timestamp.value_or(INT64_MIN);
            auto [it, inserted] = recency.emplace(c, ts);
            if (!inserted && ts > it->second) it->second = ts;
        }
        std::sort(picked.begin(), picked.end(), [&](Handle a, Handle b) {
            std::int64_t ra = recency.at(a);
            std::int64_t rb = recency.at(b);
            if (ra != rb) return ra > rb;
            return slice.entity(a).id < slice.entity(b).id;
        });
    } else {
        // per-target stream keyed by (seed, id, kind): stable under
        // any iteration order
        const EntityRef& ref = slice.entity(target);
        DetRng rng(mix64(config.seed, mix64(fnv1a64(ref.id), static_cast<std::uint64_t>(ref.kind))));
        std::sort(picked.begin(), picked.end(),
                  [&](Handle a, Handle b) { return slice.entity(a).id < slice.entity(b).id; });
        rng.shuffle(picked);
    }
    picked.resize(config.holdout);
    return picked;
}

}  // namespace

SplitResult split(const InteractionStore& store, UseCase uc, const SplitConfig& config) {
    config.validate();
    InteractionStore slice = relevant_slice(store, uc);
    EdgeType type = edge_type_of(uc);
    EntityKind target_kind = target_kind_of(uc);

    // MostRecent needs timestamps; untimestamped slices (notably the
    // projection) degrade to the seeded random strategy
    SplitConfig effective = config;
    if (effective.strategy == SplitStrategy::MostRecent && !slice.fully_timestamped(type)) {
        effective.strategy = SplitStrategy::SeededRandom;
    }

    SplitResult result;
    result.use_case = uc;
    result.strategy = effective.strategy;

    // (target handle -> withheld candidate handles), then one pass
    // assigns each edge to train or test
    std::unordered_map<Handle, std::vector<Handle>> withheld;
    for (Handle target : slice.entities_by_id(target_kind)) {
        auto candidates = slice.partners(target, type);
        if (candidates.size() < effective.min_interactions) continue;
        auto picked = withheld_candidates(slice, target, candidates, type, effective);
        std::vector<EntityRef> test_refs;
        test_refs.reserve(picked.size());
        for (Handle c : picked) test_refs.push_back(slice.entity(c));
        std::sort(test_refs.begin(), test_refs.end());
        result.test_sets.emplace(slice.entity(target), std::move(test_refs));
        std::sort(picked.begin(), picked.end());
        withheld.emplace(target, std::move(picked));
    }

    bool target_is_source = source_kind_of(type) == target_kind;
    for (std::size_t i = 0; i < slice.interaction_count(); ++i) {
        const auto& edge = slice.edges()[i];
        Handle target = target_is_source ? edge.source : edge.target;
        Handle candidate = target_is_source ? edge.target : edge.source;
        auto it = withheld.find(target);
        if (it != withheld.end() &&
            std::binary_search(it->second.begin(), it->second.end(), candidate)) {
            continue;  // test side
        }
        result.train.add(slice.interaction(i));
    }
    result.train.freeze();
    return result;
}

EvaluationRun run_evaluation(const InteractionStore& store, UseCase uc,
                             const RecommendationProfile& profile, const SplitConfig& config,
                             unsigned threads) {
    profile.validate();
    EvaluationRun run;
    run.use_case = uc;
    run.profile = profile;
    run.config = config;
    run.input_stats = compute_statistics(store);

    SplitResult sr = split(store, uc, config);
    run.slice_stats = compute_statistics(sr.train);

    std::vector<const EntityRef*> targets;
    targets.reserve(sr.test_sets.size());
    for (const auto& [target, test] : sr.test_sets) targets.push_back(&target);

    std::vector<EvaluationCase> cases(targets.size());
    if (!targets.empty()) {
        MostPopularModel mp(sr.train, uc, profile);
        std::optional<CollaborativeFilteringModel> cf;
        if (profile.algorithm == Algorithm::CollaborativeFiltering) {
            cf.emplace(sr.train, uc, profile);
        }

        auto score_target = [&](std::size_t index) {
            const EntityRef& target = *targets[index];
            RankedList entries = cf ? cf->recommend(target).entries : mp.list();
            EvaluationCase c;
            c.recommended.reserve(entries.size());
            for (const ScoredEntity& e : entries) c.recommended.push_back(e.entity.id);
            for (const EntityRef& r : sr.test_sets.at(target)) c.relevant.insert(r.id);
            cases[index] = std::move(c);
        };

        if (threads == 0) threads = std::thread::hardware_concurrency();
        if (threads <= 1 || targets.size() < 32) {
            for (std::size_t i = 0; i < targets.size(); ++i) score_target(i);
        } else {
            // deterministic: workers fill disjoint slots, aggregation
            // below runs in target-id order
            unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(targets.size()));
            std::vector<std::thread> pool;
            pool.reserve(n);
            for (unsigned w = 0; w < n; ++w) {
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < targets.size(); i += n) score_target(i);
                });
            }
            for (auto& t : pool) t.join();
        }
    }

    run.config.strategy = sr.strategy;
    run.metrics = aggregate(cases, KSettings{});
    return run;
}

}  // namespace trirec
