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

#include "trirec/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trirec/det_random.hpp"

namespace trirec {

namespace {

std::string padded_id(char prefix, std::size_t index, std::size_t total) {
    std::size_t width = 1;
    for (std::size_t rest = total; rest >= 10; rest /= 10) ++width;
    std::string digits = std::to_string(index);
    std::string out(1, prefix);
    out.append(width - std::min(width, digits.size()), '0');
    out += digits;
    return out;
}

/// Cumulative (r+1)^-skew weights; sampling inverts the CDF with a
/// binary search over a single uniform draw.
class PowerLawSampler {
public:
    PowerLawSampler(std::size_t n, double skew) : cumulative_(n) {
        double total = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            total += std::pow(static_cast<double>(r + 1), -skew);
            cumulative_[r] = total;
        }
    }

    std::size_t draw(DetRng& rng) const {
        double u = rng.unit() * cumulative_.back();
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) return cumulative_.size() - 1;
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

private:
    std::vector<double> cumulative_;
};

}  // namespace

void SyntheticConfig::validate() const {
    if (users < 1 || datasets < 1 || services < 1) {
        throw std::invalid_argument("synthetic: entity counts must be >= 1");
    }
    if (user_dataset_events < datasets) {
        throw std::invalid_argument("synthetic: user_dataset_events must cover every dataset");
    }
    if (user_service_events < services) {
        throw std::invalid_argument("synthetic: user_service_events must cover every service");
    }
    if (user_dataset_events + user_service_events < users) {
        throw std::invalid_argument("synthetic: too few events to cover every user");
    }
    if (skew < 0.0) throw std::invalid_argument("synthetic: skew must be >= 0");
}

InteractionStore generate_synthetic(const SyntheticConfig& config) {
    config.validate();
    DetRng rng(mix64(config.seed, 0x747269726563u));  // domain-separated stream

    PowerLawSampler dataset_sampler(config.datasets, config.skew);
    PowerLawSampler service_sampler(config.services, config.skew);

    InteractionStore store;
    std::int64_t clock = 0;
    std::size_t user_cursor = 0;  // first events walk the users so each occurs

    auto emit = [&](EntityKind target_kind, std::size_t candidate, std::size_t coverage_index,
                    std::size_t coverage_total) {
        std::size_t user_index;
        if (user_cursor < config.users) {
            user_index = user_cursor++;
        } else {
            user_index = static_cast<std::size_t>(rng.below(config.users));
        }
        // the first events per stream also walk the candidates
        std::size_t target_index = coverage_index < coverage_total ? coverage_index : candidate;
        Interaction interaction;
        interaction.source = user(padded_id('u', user_index, config.users));
        char prefix = target_kind == EntityKind::Dataset ? 'd' : 's';
        std::size_t total = target_kind == EntityKind::Dataset ? config.datasets : config.services;
        interaction.target = EntityRef{target_kind, padded_id(prefix, target_index, total)};
        if (config.timestamps) interaction.timestamp = ++clock;
        store.add(interaction);
    };

    for (std::size_t e = 0; e < config.user_dataset_events; ++e) {
        emit(EntityKind::Dataset, dataset_sampler.draw(rng), e, config.datasets);
    }
    for (std::size_t e = 0; e < config.user_service_events; ++e) {
        emit(EntityKind::Service, service_sampler.draw(rng), e, config.services);
    }
    store.freeze();
    return store;
}

}  // namespace trirec
