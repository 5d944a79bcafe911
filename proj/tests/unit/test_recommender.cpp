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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "trirec/recommender.hpp"
#include "unit/helpers.hpp"
#include "unit/oracles.hpp"

using namespace trirec;
using testutil::edge;
using testutil::make_store;

namespace {

std::string render(const RankedList& list) {
    std::ostringstream out;
    for (const auto& entry : list) out << entry.entity.id << ":" << entry.score << ";";
    return out.str();
}

void check_ranked_list_invariants(const RankedList& list, UseCase uc, std::size_t k) {
    CHECK(list.size() <= k);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
        CHECK(list[i].entity.kind == candidate_kind_of(uc));
        CHECK(list[i].score >= 0.0);
        if (i > 0) CHECK(list[i - 1].score >= list[i].score);
        CHECK(seen.insert(list[i].entity.id).second);
    }
}

}  // namespace

TEST_CASE("use case attributes") {
    CHECK(target_kind_of(UseCase::UC1) == EntityKind::User);
    CHECK(candidate_kind_of(UseCase::UC1) == EntityKind::Dataset);
    CHECK(target_kind_of(UseCase::UC3) == EntityKind::Service);
    CHECK(candidate_kind_of(UseCase::UC3) == EntityKind::Dataset);
    CHECK(target_kind_of(UseCase::UC4) == EntityKind::Dataset);
    CHECK(candidate_kind_of(UseCase::UC4) == EntityKind::Service);
    for (UseCase uc : kAllUseCases) CHECK(target_kind_of(uc) != candidate_kind_of(uc));
}

TEST_CASE("MP ranks candidates by interaction count and truncates to k") {
    auto store = make_store({
        edge(user("u1"), dataset("d1")), edge(user("u2"), dataset("d1")),
        edge(user("u3"), dataset("d1")), edge(user("u4"), dataset("d1")),
        edge(user("u5"), dataset("d1")),
        edge(user("u1"), dataset("d2")), edge(user("u2"), dataset("d2")),
        edge(user("u3"), dataset("d2")),
        edge(user("u1"), dataset("d3")),
    });
    auto profile = default_profile(Algorithm::MostPopular);
    profile.k = 2;
    auto list = recommend_mp(store, UseCase::UC1, profile);
    REQUIRE(list.size() == 2);
    CHECK(list[0].entity == dataset("d1"));
    CHECK(list[0].score == 5.0);
    CHECK(list[1].entity == dataset("d2"));
}

TEST_CASE("MP on an empty store is empty") {
    InteractionStore store;
    store.freeze();
    CHECK(recommend_mp(store, UseCase::UC1, default_profile(Algorithm::MostPopular)).empty());
}

TEST_CASE("MP breaks count ties lexicographically by id") {
    auto store = make_store({
        edge(user("u1"), dataset("d2")), edge(user("u2"), dataset("d2")),
        edge(user("u1"), dataset("d1")), edge(user("u2"), dataset("d1")),
        edge(user("u3"), dataset("d3")),
    });
    auto list = recommend_mp(store, UseCase::UC1, default_profile(Algorithm::MostPopular));
    REQUIRE(list.size() == 3);
    CHECK(list[0].entity == dataset("d1"));
    CHECK(list[1].entity == dataset("d2"));
    CHECK(list[2].entity == dataset("d3"));
}

TEST_CASE("MP output is identical for every target") {
    auto store = testutil::random_store(12, 6, 8, 50, 60, 99);
    auto slice = relevant_slice(store, UseCase::UC2);
    MostPopularModel model(slice, UseCase::UC2, default_profile(Algorithm::MostPopular));
    std::string first = render(model.recommend().entries);
    for (int i = 0; i < 5; ++i) {
        CHECK(render(model.recommend().entries) == first);
    }
}

TEST_CASE("MP ranks UC3 datasets by their dataset/service link count") {
    // big_d links to three services, o1 to one
    auto store = make_store({
        edge(dataset("big_d"), service("s1")),
        edge(dataset("big_d"), service("s2")),
        edge(dataset("big_d"), service("s3")),
        edge(dataset("o1"), service("s1")),
    });
    auto list = recommend_mp(store, UseCase::UC3, default_profile(Algorithm::MostPopular));
    REQUIRE(list.size() == 2);
    CHECK(list[0].entity == dataset("big_d"));
    CHECK(list[0].score == 3.0);
}

TEST_CASE("CF worked example: one shared dataset recommends the neighbor's other") {
    auto store = make_store({
        edge(user("u1"), dataset("d1")),
        edge(user("u2"), dataset("d1")),
        edge(user("u2"), dataset("d2")),
        edge(user("u3"), dataset("d3")),
    });
    auto rec = recommend_cf(store, UseCase::UC1, user("u1"),
                            default_profile(Algorithm::CollaborativeFiltering));
    CHECK_FALSE(rec.fallback);
    REQUIRE(rec.entries.size() == 1);  // d1 is filtered as seen, u3 is dissimilar
    CHECK(rec.entries[0].entity == dataset("d2"));
    CHECK(rec.entries[0].score == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("CF cold-start target falls back to the MP list with a flag") {
    auto store = make_store({
        edge(user("u1"), dataset("d1")),
        edge(user("u2"), dataset("d1")),
        edge(user("u2"), dataset("d2")),
        // u4 exists only through services: no UC1 profile
        edge(user("u4"), service("s1")),
    });
    auto profile = default_profile(Algorithm::CollaborativeFiltering);
    auto rec = recommend_cf(store, UseCase::UC1, user("u4"), profile);
    CHECK(rec.fallback);
    CHECK(render(rec.entries) == render(recommend_mp(store, UseCase::UC1, profile)));

    auto unknown = recommend_cf(store, UseCase::UC1, user("nobody"), profile);
    CHECK(unknown.fallback);
}

TEST_CASE("CF with filter_seen never recommends the target's own items") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto store = testutil::random_store(10, 8, 6, 50, 40, 2000 + seed);
        auto slice = relevant_slice(store, UseCase::UC1);
        auto profile = default_profile(Algorithm::CollaborativeFiltering);
        CollaborativeFilteringModel model(slice, UseCase::UC1, profile);
        for (auto h : slice.entities_by_id(EntityKind::User)) {
            const EntityRef& target = slice.entity(h);
            auto rec = model.recommend(target);
            if (rec.fallback) continue;
            auto seen = slice.targets_of(target, EntityKind::Dataset);
            for (const auto& entry : rec.entries) {
                CHECK(std::find(seen.begin(), seen.end(), entry.entity) == seen.end());
            }
            check_ranked_list_invariants(rec.entries, UseCase::UC1, profile.k);
        }
    }
}

TEST_CASE("CF without filter_seen may keep seen items but stays ranked") {
    auto store = testutil::random_store(10, 8, 6, 60, 0, 77);
    auto profile = default_profile(Algorithm::CollaborativeFiltering);
    profile.filter_seen = false;
    auto rec = recommend_cf(store, UseCase::UC1, user("u1"), profile);
    check_ranked_list_invariants(rec.entries, UseCase::UC1, profile.k);
}

TEST_CASE("identical inputs give identical ranked lists across runs") {
    auto store = testutil::random_store(15, 10, 5, 80, 40, 4242);
    auto profile = default_profile(Algorithm::CollaborativeFiltering);
    auto first = recommend_cf(store, UseCase::UC1, user("u3"), profile);
    for (int i = 0; i < 3; ++i) {
        auto again = recommend_cf(store, UseCase::UC1, user("u3"), profile);
        CHECK(render(again.entries) == render(first.entries));
        CHECK(again.fallback == first.fallback);
    }
}

TEST_CASE("CF scores match the dense oracle on random stores") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto store = testutil::random_store(15, 10, 8, 70, 50, 3000 + seed);
        for (UseCase uc : {UseCase::UC1, UseCase::UC2}) {
            auto slice = relevant_slice(store, uc);
            auto profile = default_profile(Algorithm::CollaborativeFiltering);
            CollaborativeFilteringModel model(slice, uc, profile);
            oracle::DenseCfOracle reference(slice, uc, profile);
            for (const std::string& target_id : reference.targets()) {
                EntityRef target{target_kind_of(uc), target_id};
                auto got = model.raw_scores(target);
                auto expected = reference.scores(target_id);
                REQUIRE(got.size() == expected.size());
                for (const auto& [id, score] : got) {
                    REQUIRE(expected.count(id) == 1);
                    CHECK(score == doctest::Approx(expected[id]).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("CF on the projected network compares target-kind entities") {
    // services share datasets; recommending datasets for services (UC3)
    auto store = make_store({
        edge(dataset("d1"), service("s1")),
        edge(dataset("d1"), service("s2")),
        edge(dataset("d2"), service("s2")),
    });
    auto rec = recommend_cf(store, UseCase::UC3, service("s1"),
                            default_profile(Algorithm::CollaborativeFiltering));
    CHECK_FALSE(rec.fallback);
    REQUIRE(rec.entries.size() == 1);
    CHECK(rec.entries[0].entity == dataset("d2"));
    // sim(s1, s2) = 1/sqrt(1*2)
    CHECK(rec.entries[0].score == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("UC3/UC4 project raw stores before recommending") {
    auto store = make_store({
        edge(user("u1"), dataset("d1")),
        edge(user("u1"), service("s1")),
        edge(user("u2"), dataset("d2")),
        edge(user("u2"), service("s1")),
    });
    // projection: d1-s1, d2-s1 -> s1's profile is {d1, d2}
    auto list = recommend_mp(store, UseCase::UC3, default_profile(Algorithm::MostPopular));
    REQUIRE(list.size() == 2);
    CHECK(list[0].entity == dataset("d1"));  // tie broken by id
    auto rec = recommend_cf(store, UseCase::UC4, dataset("d1"),
                            default_profile(Algorithm::CollaborativeFiltering));
    // d2 is the only neighbor and s1 is already seen by d1
    CHECK(rec.entries.empty());
}

TEST_CASE("adding a neighbor that has the candidate never lowers its score") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto base = testutil::random_store(8, 6, 4, 30, 0, 5000 + seed);
        auto profile = default_profile(Algorithm::CollaborativeFiltering);
        profile.filter_seen = false;
        profile.neighborhood_size = (seed % 2 == 0) ? 2 : 100;  // with and without truncation

        EntityRef target = user("u1");
        EntityRef candidate = dataset("d0");
        auto score_of = [&](const InteractionStore& store) {
            auto slice = relevant_slice(store, UseCase::UC1);
            CollaborativeFilteringModel model(slice, UseCase::UC1, profile);
            for (const auto& [id, score] : model.raw_scores(target)) {
                if (id == candidate.id) return score;
            }
            return 0.0;
        };
        double before = score_of(base);

        // the new neighbor shares one of the target's datasets and has
        // the candidate
        auto grown = base.thawed_copy();
        auto shared = base.targets_of(target, EntityKind::Dataset);
        if (shared.empty()) continue;
        grown.add(edge(user("zz_new"), shared.front()));
        grown.add(edge(user("zz_new"), candidate));
        grown.freeze();
        double after = score_of(grown);
        CHECK(after >= before - 1e-15);
    }
}

TEST_CASE("profile validation") {
    RecommendationProfile profile;
    profile.k = 0;
    CHECK_THROWS_AS(profile.validate(), std::invalid_argument);
    profile.k = 10;
    profile.neighborhood_size = 0;
    CHECK_THROWS_AS(profile.validate(), std::invalid_argument);
    CHECK(default_profile(Algorithm::CollaborativeFiltering).filter_seen);
    CHECK_FALSE(default_profile(Algorithm::MostPopular).filter_seen);
}

TEST_CASE("parsers accept the documented tokens") {
    CHECK(parse_use_case("uc1") == UseCase::UC1);
    CHECK(parse_use_case("UC4") == UseCase::UC4);
    CHECK_FALSE(parse_use_case("uc5").has_value());
    CHECK(parse_algorithm("mp") == Algorithm::MostPopular);
    CHECK(parse_algorithm("cf") == Algorithm::CollaborativeFiltering);
    CHECK_FALSE(parse_algorithm("svd").has_value());
}
