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

#include "trirec/report.hpp"

#include <array>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace trirec {

namespace {

std::string fixed3(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", value);
    return buffer;
}

/// Winner order within a use case: nDCG first, then the rest as
/// increasingly fine tie-breaks, finally the algorithm name.
bool beats(const EvaluationRun& a, const EvaluationRun& b) {
    if (a.metrics.defined() != b.metrics.defined()) return a.metrics.defined();
    if (!a.metrics.defined()) return false;
    auto ka = std::array{a.metrics.ndcg_at_10, a.metrics.map_at_10, a.metrics.mrr_paper_at_10,
                         a.metrics.r_at_10,    a.metrics.f1_at_5,   a.metrics.p_at_1};
    auto kb = std::array{b.metrics.ndcg_at_10, b.metrics.map_at_10, b.metrics.mrr_paper_at_10,
                         b.metrics.r_at_10,    b.metrics.f1_at_5,   b.metrics.p_at_1};
    if (ka != kb) return ka > kb;
    return to_string(a.profile.algorithm) < to_string(b.profile.algorithm);
}

void append_padded(std::string& out, std::string_view text, std::size_t width) {
    out += text;
    if (text.size() < width) out.append(width - text.size(), ' ');
}

nlohmann::json profile_json(const RecommendationProfile& p) {
    nlohmann::json j;
    j["algorithm"] = std::string(to_string(p.algorithm));
    j["k"] = p.k;
    j["neighborhood_size"] = p.neighborhood_size;
    j["similarity"] = std::string(to_string(p.similarity));
    j["filter_seen"] = p.filter_seen;
    return j;
}

nlohmann::json stats_json(const StoreStatistics& s) {
    nlohmann::json j;
    j["users"] = s.users;
    j["datasets"] = s.datasets;
    j["services"] = s.services;
    j["user_dataset_interactions"] = s.user_dataset;
    j["user_service_interactions"] = s.user_service;
    j["dataset_service_interactions"] = s.dataset_service;
    return j;
}

}  // namespace

std::string render_statistics(const StoreStatistics& stats) {
    std::string out;
    auto row = [&out](std::string_view label, std::size_t value) {
        append_padded(out, label, 36);
        out += std::to_string(value);
        out += '\n';
    };
    row("users", stats.users);
    row("datasets", stats.datasets);
    row("services", stats.services);
    row("user/dataset interactions", stats.user_dataset);
    row("user/service interactions", stats.user_service);
    row("dataset/service interactions", stats.dataset_service);
    return out;
}

std::string render_metrics_row(const MetricReport& m) {
    if (!m.defined()) return "n/a    n/a    n/a    n/a            n/a          n/a     n/a";
    std::string out;
    append_padded(out, fixed3(m.p_at_1), 7);
    append_padded(out, fixed3(m.f1_at_5), 7);
    append_padded(out, fixed3(m.r_at_10), 7);
    append_padded(out, fixed3(m.mrr_paper_at_10), 15);
    append_padded(out, fixed3(m.mrr_standard_at_10), 13);
    append_padded(out, fixed3(m.map_at_10), 8);
    out += fixed3(m.ndcg_at_10);
    return out;
}

std::string render_table(std::span<const EvaluationRun> runs) {
    std::string out;
    append_padded(out, "use_case", 10);
    append_padded(out, "algorithm", 11);
    append_padded(out, "n_cases", 9);
    append_padded(out, "strategy", 10);
    append_padded(out, "P@1", 7);
    append_padded(out, "F1@5", 7);
    append_padded(out, "R@10", 7);
    append_padded(out, "MRR@10(paper)", 15);
    append_padded(out, "MRR@10(std)", 13);
    append_padded(out, "MAP@10", 8);
    append_padded(out, "nDCG@10", 9);
    out += "best\n";

    for (const EvaluationRun& run : runs) {
        bool best = run.metrics.defined();
        for (const EvaluationRun& other : runs) {
            if (&other == &run || other.use_case != run.use_case) continue;
            if (beats(other, run)) best = false;
        }
        append_padded(out, to_string(run.use_case), 10);
        append_padded(out, to_string(run.profile.algorithm), 11);
        append_padded(out, std::to_string(run.metrics.n_cases), 9);
        append_padded(out, to_string(run.config.strategy), 10);
        if (run.metrics.defined()) {
            append_padded(out, fixed3(run.metrics.p_at_1), 7);
            append_padded(out, fixed3(run.metrics.f1_at_5), 7);
            append_padded(out, fixed3(run.metrics.r_at_10), 7);
            append_padded(out, fixed3(run.metrics.mrr_paper_at_10), 15);
            append_padded(out, fixed3(run.metrics.mrr_standard_at_10), 13);
            append_padded(out, fixed3(run.metrics.map_at_10), 8);
            append_padded(out, fixed3(run.metrics.ndcg_at_10), 9);
        } else {
            for (std::size_t width : {7, 7, 7, 15, 13, 8, 9}) append_padded(out, "n/a", width);
        }
        out += best ? "*" : "";
        out += '\n';
    }
    return out;
}

std::string render_json(std::span<const EvaluationRun> runs) {
    nlohmann::json doc;
    doc["runs"] = nlohmann::json::array();
    for (const EvaluationRun& run : runs) {
        nlohmann::json j;
        j["use_case"] = std::string(to_string(run.use_case));
        j["algorithm"] = std::string(to_string(run.profile.algorithm));
        j["profile"] = profile_json(run.profile);
        j["split"] = {{"min_interactions", run.config.min_interactions},
                      {"holdout", run.config.holdout},
                      {"strategy", std::string(to_string(run.config.strategy))},
                      {"seed", run.config.seed}};
        j["input_statistics"] = stats_json(run.input_stats);
        j["slice_statistics"] = stats_json(run.slice_stats);
        nlohmann::json m;
        m["n_cases"] = run.metrics.n_cases;
        if (run.metrics.defined()) {
            m["p_at_1"] = run.metrics.p_at_1;
            m["f1_at_5"] = run.metrics.f1_at_5;
            m["r_at_10"] = run.metrics.r_at_10;
            m["mrr_paper_at_10"] = run.metrics.mrr_paper_at_10;
            m["mrr_standard_at_10"] = run.metrics.mrr_standard_at_10;
            m["map_at_10"] = run.metrics.map_at_10;
            m["ndcg_at_10"] = run.metrics.ndcg_at_10;
        } else {
            m["p_at_1"] = nullptr;
            m["f1_at_5"] = nullptr;
            m["r_at_10"] = nullptr;
            m["mrr_paper_at_10"] = nullptr;
            m["mrr_standard_at_10"] = nullptr;
            m["map_at_10"] = nullptr;
            m["ndcg_at_10"] = nullptr;
        }
        j["metrics"] = m;
        doc["runs"].push_back(j);
    }
    return doc.dump(2) + "\n";
}

}  // namespace trirec
