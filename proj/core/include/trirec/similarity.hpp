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
#include <vector>

#include "trirec/entity.hpp"

namespace trirec {

enum class SimilarityMeasure : std::uint8_t { Cosine, Jaccard };

std::string_view to_string(SimilarityMeasure measure);
std::optional<SimilarityMeasure> parse_similarity_measure(std::string_view token);

/// Set similarity over binary interaction profiles.
///   Cosine  = |a ∩ b| / sqrt(|a| * |b|)
///   Jaccard = |a ∩ b| / |a ∪ b|
/// An empty operand yields 0. Inputs are treated as sets (duplicates
/// de-duplicated).
double similarity(std::span<const EntityRef> a, std::span<const EntityRef> b,
                  SimilarityMeasure measure);

namespace detail {

/// Same formulas over pre-sorted, duplicate-free integer profiles.
/// Keeps one authoritative arithmetic path: intersection counts are
/// exact integers; cosine divides by sqrt of the size product.
double similarity_sorted(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                         SimilarityMeasure measure);

std::size_t intersection_size(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

}  // namespace detail

}  // namespace trirec
