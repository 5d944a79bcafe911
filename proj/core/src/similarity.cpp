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

#include "trirec/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace trirec {

std::string_view to_string(SimilarityMeasure measure) {
    return measure == SimilarityMeasure::Cosine ? "cosine" : "jaccard";
}

std::optional<SimilarityMeasure> parse_similarity_measure(std::string_view token) {
    if (token == "cosine") return SimilarityMeasure::Cosine;
    if (token == "jaccard") return SimilarityMeasure::Jaccard;
    return std::nullopt;
}

namespace detail {

std::size_t intersection_size(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    std::size_t count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

double similarity_sorted(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                         SimilarityMeasure measure) {
    if (a.empty() || b.empty()) return 0.0;
    std::size_t shared = intersection_size(a, b);
    if (shared == 0) return 0.0;
    if (measure == SimilarityMeasure::Cosine) {
        return static_cast<double>(shared) /
               std::sqrt(static_cast<double>(a.size()) * static_cast<double>(b.size()));
    }
    return static_cast<double>(shared) / static_cast<double>(a.size() + b.size() - shared);
}

}  // namespace detail

namespace {

std::vector<EntityRef> dedup(std::span<const EntityRef> refs) {
    std::vector<EntityRef> out(refs.begin(), refs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

double similarity(std::span<const EntityRef> a, std::span<const EntityRef> b,
                  SimilarityMeasure measure) {
    auto sa = dedup(a);
    auto sb = dedup(b);
    if (sa.empty() || sb.empty()) return 0.0;
    std::size_t shared = 0;
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j]) {
            ++i;
        } else if (sb[j] < sa[i]) {
            ++j;
        } else {
            ++shared;
            ++i;
            ++j;
        }
    }
    if (shared == 0) return 0.0;
    if (measure == SimilarityMeasure::Cosine) {
        return static_cast<double>(shared) /
               std::sqrt(static_cast<double>(sa.size()) * static_cast<double>(sb.size()));
    }
    return static_cast<double>(shared) / static_cast<double>(sa.size() + sb.size() - shared);
}

}  // namespace trirec
