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

#include "trirec/store.hpp"

namespace trirec {

/// Parameters of the seeded interaction generator. Popularity of
/// candidates follows a power law in their rank: candidate r is drawn
/// with probability proportional to (r+1)^-skew, so skew 0 is uniform.
/// Every requested entity is guaranteed to occur in at least one
/// interaction, which requires
///   user_dataset_events >= datasets,
///   user_service_events >= services, and
///   user_dataset_events + user_service_events >= users.
struct SyntheticConfig {
    std::size_t users = 100;
    std::size_t datasets = 10;
    std::size_t services = 50;
    std::size_t user_dataset_events = 500;
    std::size_t user_service_events = 1000;
    double skew = 1.0;
    std::uint64_t seed = 0;
    bool timestamps = true;

    /// Throws std::invalid_argument on infeasible shapes.
    void validate() const;
};

/// Pure function of its config: the same parameters and seed always
/// produce the identical frozen store. Ids are zero-padded ("u005",
/// "d02", "s013") so lexicographic order matches numeric order.
InteractionStore generate_synthetic(const SyntheticConfig& config);

}  // namespace trirec
