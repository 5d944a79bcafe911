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

#include "trirec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace trirec {

namespace {

std::size_t cutoff(const EvaluationCase& c, std::size_t k) {
    return std::min(k, c.recommended.size());
}

std::size_t hits_in_top_k(const EvaluationCase& c, std::size_t k) {
    std::size_t hits = 0;
    std::size_t n = cutoff(c, k);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.relevant.count(c.recommended[i])) ++hits;
    }
    return hits;
}

void require_relevant(const EvaluationCase& c, const char* metric) {
    if (c.relevant.empty()) {
        throw std::invalid_argument(std::string(metric) + ": relevant set is empty");
    }
}

}  // namespace

double precision_at_k(const EvaluationCase& c, std::size_t k) {
    if (k < 1) throw std::invalid_argument("precision_at_k: k must be >= 1");
    return static_cast<double>(hits_in_top_k(c, k)) / static_cast<double>(k);
}

double recall_at_k(const EvaluationCase& c, std::size_t k) {
    require_relevant(c, "recall_at_k");
    return static_cast<double>(hits_in_top_k(c, k)) / static_cast<double>(c.relevant.size());
}

double f1_at_k(const EvaluationCase& c, std::size_t k) {
    double p = precision_at_k(c, k);
    double r = recall_at_k(c, k);
    if (p + r == 0.0) return 0.0;
    return 2.0 * p * r / (p + r);
}

double mrr_standard_at_k(const EvaluationCase& c, std::size_t k) {
    std::size_t n = cutoff(c, k);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.relevant.count(c.recommended[i])) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

double mrr_paper_at_k(const EvaluationCase& c, std::size_t k) {
    require_relevant(c, "mrr_paper_at_k");
    double sum = 0.0;
    std::size_t n = cutoff(c, k);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.relevant.count(c.recommended[i])) {
            sum += 1.0 / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(c.relevant.size());
}

double average_precision_at_k(const EvaluationCase& c, std::size_t k) {
    require_relevant(c, "average_precision_at_k");
    double sum = 0.0;
    std::size_t hits = 0;
    std::size_t n = cutoff(c, k);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.relevant.count(c.recommended[i])) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(std::min(c.relevant.size(), k));
}

double ndcg_at_k(const EvaluationCase& c, std::size_t k) {
    require_relevant(c, "ndcg_at_k");
    double dcg = 0.0;
    std::size_t n = cutoff(c, k);
    for (std::size_t i = 0; i < n; ++i) {
        if (c.relevant.count(c.recommended[i])) {
            dcg += 1.0 / std::log2(static_cast<double>(i + 2));
        }
    }
    double idcg = 0.0;
    std::size_t ideal = std::min(c.relevant.size(), k);
    for (std::size_t i = 0; i < ideal; ++i) {
        idcg += 1.0 / std::log2(static_cast<double>(i + 2));
    }
    return dcg / idcg;
}

CaseMetrics compute_case(const EvaluationCase& c, const KSettings& ks) {
    CaseMetrics m;
    m.p = precision_at_k(c, ks.precision_k);
    m.f1 = f1_at_k(c, ks.f1_k);
    m.r = recall_at_k(c, ks.recall_k);
    m.mrr_paper = mrr_paper_at_k(c, ks.mrr_k);
    m.mrr_standard = mrr_standard_at_k(c, ks.mrr_k);
    m.map = average_precision_at_k(c, ks.map_k);
    m.ndcg = ndcg_at_k(c, ks.ndcg_k);
    return m;
}

MetricReport aggregate(std::span<const EvaluationCase> cases, const KSettings& ks) {
    MetricReport report;
    report.ks = ks;
    for (const EvaluationCase& c : cases) {
        if (c.relevant.empty()) continue;
        CaseMetrics m = compute_case(c, ks);
        report.p_at_1 += m.p;
        report.f1_at_5 += m.f1;
        report.r_at_10 += m.r;
        report.mrr_paper_at_10 += m.mrr_paper;
        report.mrr_standard_at_10 += m.mrr_standard;
        report.map_at_10 += m.map;
        report.ndcg_at_10 += m.ndcg;
        report.n_cases++;
    }
    if (report.n_cases > 0) {
        double n = static_cast<double>(report.n_cases);
        report.p_at_1 /= n;
        report.f1_at_5 /= n;
        report.r_at_10 /= n;
        report.mrr_paper_at_10 /= n;
        report.mrr_standard_at_10 /= n;
        report.map_at_10 /= n;
        report.ndcg_at_10 /= n;
    }
    return report;
}

}  // namespace trirec
