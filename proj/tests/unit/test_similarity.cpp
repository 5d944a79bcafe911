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

#include "trirec/similarity.hpp"

using namespace trirec;

namespace {
std::vector<EntityRef> datasets(std::initializer_list<const char*> ids) {
    std::vector<EntityRef> out;
    for (const char* id : ids) out.push_back(dataset(id));
    return out;
}
}  // namespace

TEST_CASE("identical non-empty sets have similarity 1 under both measures") {
    auto a = datasets({"d1", "d2", "d3"});
    CHECK(similarity(a, a, SimilarityMeasure::Cosine) == 1.0);
    CHECK(similarity(a, a, SimilarityMeasure::Jaccard) == 1.0);
}

TEST_CASE("disjoint sets have similarity 0") {
    auto a = datasets({"d1", "d2"});
    auto b = datasets({"d3"});
    CHECK(similarity(a, b, SimilarityMeasure::Cosine) == 0.0);
    CHECK(similarity(a, b, SimilarityMeasure::Jaccard) == 0.0);
}

TEST_CASE("one shared item of sizes 1 and 2") {
    auto a = datasets({"d1"});
    auto b = datasets({"d1", "d2"});
    CHECK(similarity(a, b, SimilarityMeasure::Cosine) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(similarity(a, b, SimilarityMeasure::Jaccard) == 0.5);
}

TEST_CASE("empty operands give 0") {
    auto a = datasets({});
    auto b = datasets({"d1"});
    CHECK(similarity(a, b, SimilarityMeasure::Cosine) == 0.0);
    CHECK(similarity(b, a, SimilarityMeasure::Cosine) == 0.0);
    CHECK(similarity(a, a, SimilarityMeasure::Jaccard) == 0.0);
}

TEST_CASE("inputs are treated as sets") {
    auto a = datasets({"d1", "d1", "d1"});
    auto b = datasets({"d1", "d2"});
    CHECK(similarity(a, b, SimilarityMeasure::Cosine) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("sorted-profile path agrees with the set path") {
    std::vector<std::uint32_t> a = {1, 2, 5, 9};
    std::vector<std::uint32_t> b = {2, 3, 9};
    CHECK(detail::intersection_size(a, b) == 2);
    CHECK(detail::similarity_sorted(a, b, SimilarityMeasure::Cosine) ==
          doctest::Approx(2.0 / std::sqrt(12.0)).epsilon(1e-12));
    CHECK(detail::similarity_sorted(a, b, SimilarityMeasure::Jaccard) ==
          doctest::Approx(2.0 / 5.0).epsilon(1e-12));
}
