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

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace trirec {

/// One scored target: the ranked recommendation ids (ordered, no
/// duplicates) against the withheld relevant ids.
struct EvaluationCase {
    std::vector<std::string> recommended;
    std::unordered_set<std::string> relevant;
};

/// |top-k ∩ relevant| / k
double precision_at_k(const EvaluationCase& c, std::size_t k);

/// |top-k ∩ relevant| / |relevant|. Throws std::invalid_argument when
/// the relevant set is empty (such cases are excluded upstream).
double recall_at_k(const EvaluationCase& c, std::size_t k);

/// Harmonic mean of precision and recall at k; 0 when both are 0.
double f1_at_k(const EvaluationCase& c, std::size_t k);

/// 1 / rank of the first relevant item within the top k; 0 when none.
double mrr_standard_at_k(const EvaluationCase& c, std::size_t k);

/// Mean over ALL relevant items of their reciprocal rank within the
/// top k (missing items contribute 0):
///   (1/|relevant|) * sum over hits of 1/rank.
/// Capped by H_k/|relevant|-style bounds rather than 1/rank of the
/// first hit, which is what makes reported MRR@10 values far below
/// P@1 possible. Throws std::invalid_argument on an empty relevant
/// set.
double mrr_paper_at_k(const EvaluationCase& c, std::size_t k);

/// (1/min(|relevant|, k)) * sum_{i<=k, item i relevant} P@i.
/// Throws std::invalid_argument on an empty relevant set.
double average_precision_at_k(const EvaluationCase& c, std::size_t k);

/// Binary-gain nDCG with the log2(i+1) discount; the ideal ranking
/// places min(|relevant|, k) relevant items on top. Throws
/// std::invalid_argument on an empty relevant set.
double ndcg_at_k(const EvaluationCase& c, std::size_t k);

/// Cutoffs per metric column; defaults follow the reported table
/// (P@1, F1@5, everything else @10).
struct KSettings {
    std::size_t precision_k = 1;
    std::size_t f1_k = 5;
    std::size_t recall_k = 10;
    std::size_t mrr_k = 10;
    std::size_t map_k = 10;
    std::size_t ndcg_k = 10;
};

struct CaseMetrics {
    double p = 0, f1 = 0, r = 0, mrr_paper = 0, mrr_standard = 0, map = 0, ndcg = 0;
};

CaseMetrics compute_case(const EvaluationCase& c, const KSettings& ks);

/// Arithmetic means over all scored cases. Metric values are only
/// meaningful when defined() holds (n_cases > 0).
struct MetricReport {
    double p_at_1 = 0;
    double f1_at_5 = 0;
    double r_at_10 = 0;
    double mrr_paper_at_10 = 0;
    double mrr_standard_at_10 = 0;
    double map_at_10 = 0;
    double ndcg_at_10 = 0;
    std::size_t n_cases = 0;
    KSettings ks;

    bool defined() const { return n_cases > 0; }
};

/// Mean of each per-case metric. Cases with an empty relevant set are
/// excluded, not scored as zero; n_cases counts what remained.
MetricReport aggregate(std::span<const EvaluationCase> cases, const KSettings& ks = {});

}  // namespace trirec
