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

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "trirec/entity.hpp"

namespace trirec {

/// Indexed multigraph of interactions.
///
/// Entities are interned to dense handles on first sight; per-entity
/// forward/reverse adjacency and per-edge-type incidence counters are
/// maintained incrementally so they always equal what a rebuild from
/// the raw interaction list would produce.
///
/// Construction is single-writer. After freeze() the store is
/// immutable and safe to share across concurrent readers; all read
/// operations are side-effect free.
class InteractionStore {
public:
    using Handle = std::uint32_t;

    struct Edge {
        Handle source;
        Handle target;
        EdgeType type;
        double weight;
        std::optional<std::int64_t> timestamp;
    };

    /// Appends one interaction. Duplicate (source, target) pairs are
    /// kept (multigraph semantics). Throws StoreError on an invalid
    /// kind pair, malformed id, non-positive weight, or frozen store.
    void add(const Interaction& interaction);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    /// Mutable copy of a (possibly frozen) store.
    InteractionStore thawed_copy() const;

    std::size_t interaction_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Materializes the interaction at `index` back into EntityRefs.
    Interaction interaction(std::size_t index) const;

    const EntityRef& entity(Handle h) const { return entities_[h]; }
    std::optional<Handle> find(const EntityRef& e) const;
    bool contains(const EntityRef& e) const { return find(e).has_value(); }

    std::size_t entity_count() const { return entities_.size(); }
    std::size_t entity_count(EntityKind kind) const;

    /// Handles of all entities of `kind`, sorted by id.
    std::vector<Handle> entities_by_id(EntityKind kind) const;

    /// Distinct one-hop targets of `e` with the given kind, sorted by
    /// id. Empty for unknown entities.
    std::vector<EntityRef> targets_of(const EntityRef& e, EntityKind target_kind) const;

    /// Number of interactions whose target is `e` (0 if unknown).
    std::size_t popularity(const EntityRef& e) const;
    std::size_t popularity(Handle h) const;

    /// Distinct partners of `h` through edges of `type`: targets when
    /// `h` is on the source side of the pair, sources otherwise.
    /// Sorted by handle.
    std::vector<Handle> partners(Handle h, EdgeType type) const;

    /// Number of `type` edges incident to `h`, counting multiplicity.
    /// This is the count MP ranks by within a use case's edge slice.
    std::size_t pair_degree(Handle h, EdgeType type) const;

    std::size_t edge_type_count(EdgeType type) const {
        return type_counts_[static_cast<int>(type)];
    }

    /// True when every edge in the store has the given type (vacuously
    /// true only for non-empty stores of that type).
    bool pure_edge_type(EdgeType type) const {
        return !edges_.empty() && edge_type_count(type) == edges_.size();
    }

    /// True when every edge of `type` carries a timestamp.
    bool fully_timestamped(EdgeType type) const;

private:
    Handle intern(const EntityRef& e);

    std::vector<Edge> edges_;
    std::vector<EntityRef> entities_;
    std::unordered_map<EntityRef, Handle> handle_of_;
    std::vector<std::vector<std::uint32_t>> out_edges_;  // per entity: edge indices
    std::vector<std::vector<std::uint32_t>> in_edges_;
    std::vector<std::array<std::uint32_t, kEdgeTypeCount>> in_count_;
    std::vector<std::array<std::uint32_t, kEdgeTypeCount>> out_count_;
    std::array<std::size_t, kEdgeTypeCount> type_counts_{};
    std::array<std::size_t, kEntityKindCount> kind_counts_{};
    bool frozen_ = false;
};

/// Derives the dataset-service co-interaction network: one edge per
/// distinct (dataset, service) pair some user interacted with both of,
/// weighted by the number of distinct such users. Edges are emitted
/// sorted by (dataset id, service id); the result is frozen.
InteractionStore project_dataset_service(const InteractionStore& store);

/// New frozen store holding only the edges of `type`, in input order.
InteractionStore slice_edges(const InteractionStore& store, EdgeType type);

}  // namespace trirec
