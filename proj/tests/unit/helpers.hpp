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

#include <string>
#include <vector>

#include "trirec/det_random.hpp"
#include "trirec/store.hpp"

namespace testutil {

inline trirec::Interaction edge(trirec::EntityRef source, trirec::EntityRef target,
                                double weight = 1.0,
                                std::optional<std::int64_t> timestamp = std::nullopt) {
    return trirec::Interaction{std::move(source), std::move(target), weight, timestamp};
}

inline trirec::InteractionStore make_store(const std::vector<trirec::Interaction>& interactions,
                                           bool freeze = true) {
    trirec::InteractionStore store;
    for (const auto& i : interactions) store.add(i);
    if (freeze) store.freeze();
    return store;
}

/// Random tripartite store with `ud` user->dataset and `us`
/// user->service edges drawn uniformly; edge endpoints repeat
/// (multigraph). Deterministic per seed.
inline trirec::InteractionStore random_store(std::size_t users, std::size_t datasets,
                                             std::size_t services, std::size_t ud, std::size_t us,
                                             std::uint64_t seed, bool timestamps = false) {
    trirec::DetRng rng(seed);
    trirec::InteractionStore store;
    std::int64_t clock = 0;
    for (std::size_t i = 0; i < ud; ++i) {
        auto interaction =
            edge(trirec::user("u" + std::to_string(rng.below(users))),
                 trirec::dataset("d" + std::to_string(rng.below(datasets))));
        if (timestamps) interaction.timestamp = ++clock;
        store.add(interaction);
    }
    for (std::size_t i = 0; i < us; ++i) {
        auto interaction =
            edge(trirec::user("u" + std::to_string(rng.below(users))),
                 trirec::service("s" + std::to_string(rng.below(services))));
        if (timestamps) interaction.timestamp = ++clock;
        store.add(interaction);
    }
    store.freeze();
    return store;
}

/// Random pure dataset->service store (an explicit projected slice).
inline trirec::InteractionStore random_projected_store(std::size_t datasets, std::size_t services,
                                                       std::size_t edges, std::uint64_t seed,
                                                       bool timestamps = false) {
    trirec::DetRng rng(seed);
    trirec::InteractionStore store;
    std::int64_t clock = 0;
    for (std::size_t i = 0; i < edges; ++i) {
        auto interaction =
            edge(trirec::dataset("d" + std::to_string(rng.below(datasets))),
                 trirec::service("s" + std::to_string(rng.below(services))));
        if (timestamps) interaction.timestamp = ++clock;
        store.add(interaction);
    }
    store.freeze();
    return store;
}

}  // namespace testutil
