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

#include "trirec/store.hpp"

#include <algorithm>

namespace trirec {

InteractionStore::Handle InteractionStore::intern(const EntityRef& e) {
    auto it = handle_of_.find(e);
    if (it != handle_of_.end()) return it->second;
    Handle h = static_cast<Handle>(entities_.size());
    entities_.push_back(e);
    handle_of_.emplace(e, h);
    out_edges_.emplace_back();
    in_edges_.emplace_back();
    in_count_.push_back({});
    out_count_.push_back({});
    kind_counts_[static_cast<int>(e.kind)]++;
    return h;
}

void InteractionStore::add(const Interaction& interaction) {
    if (frozen_) {
        throw StoreError("store is frozen; copy it with thawed_copy() before writing");
    }
    auto type = edge_type_of(interaction.source.kind, interaction.target.kind);
    if (!type) {
        throw StoreError("invalid kind pair: " + std::string(to_string(interaction.source.kind)) +
                         " -> " + std::string(to_string(interaction.target.kind)));
    }
    if (!valid_entity_id(interaction.source.id)) {
        throw StoreError("invalid source id: '" + interaction.source.id + "'");
    }
    if (!valid_entity_id(interaction.target.id)) {
        throw StoreError("invalid target id: '" + interaction.target.id + "'");
    }
    if (!(interaction.weight > 0.0)) {
        throw StoreError("interaction weight must be positive");
    }

    Handle s = intern(interaction.source);
    Handle t = intern(interaction.target);
    auto edge_index = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back(Edge{s, t, *type, interaction.weight, interaction.timestamp});
    out_edges_[s].push_back(edge_index);
    in_edges_[t].push_back(edge_index);
    out_count_[s][static_cast<int>(*type)]++;
    in_count_[t][static_cast<int>(*type)]++;
    type_counts_[static_cast<int>(*type)]++;
}

InteractionStore InteractionStore::thawed_copy() const {
    InteractionStore copy = *this;
    copy.frozen_ = false;
    return copy;
}

Interaction InteractionStore::interaction(std::size_t index) const {
    const Edge& e = edges_.at(index);
    return Interaction{entities_[e.source], entities_[e.target], e.weight, e.timestamp};
}

std::optional<InteractionStore::Handle> InteractionStore::find(const EntityRef& e) const {
    auto it = handle_of_.find(e);
    if (it == handle_of_.end()) return std::nullopt;
    return it->second;
}

std::size_t InteractionStore::entity_count(EntityKind kind) const {
    return kind_counts_[static_cast<int>(kind)];
}

std::vector<InteractionStore::Handle> InteractionStore::entities_by_id(EntityKind kind) const {
    std::vector<Handle> out;
    out.reserve(entity_count(kind));
    for (Handle h = 0; h < entities_.size(); ++h) {
        if (entities_[h].kind == kind) out.push_back(h);
    }
    std::sort(out.begin(), out.end(),
              [this](Handle a, Handle b) { return entities_[a].id < entities_[b].id; });
    return out;
}

std::vector<EntityRef> InteractionStore::targets_of(const EntityRef& e, EntityKind target_kind) const {
    auto h = find(e);
    if (!h) return {};
    std::vector<EntityRef> out;
    for (std::uint32_t edge_index : out_edges_[*h]) {
        const Edge& edge = edges_[edge_index];
        if (entities_[edge.target].kind == target_kind) out.push_back(entities_[edge.target]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t InteractionStore::popularity(const EntityRef& e) const {
    auto h = find(e);
    return h ? popularity(*h) : 0;
}

std::size_t InteractionStore::popularity(Handle h) const {
    return in_edges_[h].size();
}

std::vector<InteractionStore::Handle> InteractionStore::partners(Handle h, EdgeType type) const {
    std::vector<Handle> out;
    if (entities_[h].kind == source_kind_of(type)) {
        out.reserve(out_count_[h][static_cast<int>(type)]);
        for (std::uint32_t edge_index : out_edges_[h]) {
            const Edge& edge = edges_[edge_index];
            if (edge.type == type) out.push_back(edge.target);
        }
    } else if (entities_[h].kind == target_kind_of(type)) {
        out.reserve(in_count_[h][static_cast<int>(type)]);
        for (std::uint32_t edge_index : in_edges_[h]) {
            const Edge& edge = edges_[edge_index];
            if (edge.type == type) out.push_back(edge.source);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t InteractionStore::pair_degree(Handle h, EdgeType type) const {
    return in_count_[h][static_cast<int>(type)] + out_count_[h][static_cast<int>(type)];
}

bool InteractionStore::fully_timestamped(EdgeType type) const {
    if (edge_type_count(type) == 0) return false;
    for (const Edge& e : edges_) {
        if (e.type == type && !e.timestamp) return false;
    }
    return true;
}

InteractionStore project_dataset_service(const InteractionStore& store) {
    // Distinct-user count per (dataset, service) pair. Each user is
    // de-duplicated per pair by iterating their distinct partner sets.
    std::unordered_map<std::uint64_t, std::uint32_t> pair_users;
    for (InteractionStore::Handle h = 0; h < store.entity_count(); ++h) {
        if (store.entity(h).kind != EntityKind::User) continue;
        auto datasets = store.partners(h, EdgeType::UserDataset);
        if (datasets.empty()) continue;
        auto services = store.partners(h, EdgeType::UserService);
        for (auto d : datasets) {
            for (auto s : services) {
                std::uint64_t key = (static_cast<std::uint64_t>(d) << 32) | s;
                pair_users[key]++;
            }
        }
    }

    struct Link {
        InteractionStore::Handle dataset;
        InteractionStore::Handle service;
        std::uint32_t users;
    };
    std::vector<Link> links;
    links.reserve(pair_users.size());
    for (auto [key, users] : pair_users) {
        links.push_back(Link{static_cast<InteractionStore::Handle>(key >> 32),
                             static_cast<InteractionStore::Handle>(key & 0xffffffffu), users});
    }
    std::sort(links.begin(), links.end(), [&store](const Link& a, const Link& b) {
        const std::string& ad = store.entity(a.dataset).id;
        const std::string& bd = store.entity(b.dataset).id;
        if (ad != bd) return ad < bd;
        return store.entity(a.service).id < store.entity(b.service).id;
    });

    InteractionStore projected;
    for (const Link& link : links) {
        projected.add(Interaction{dataset(store.entity(link.dataset).id),
                                  service(store.entity(link.service).id),
                                  static_cast<double>(link.users), std::nullopt});
    }
    projected.freeze();
    return projected;
}

InteractionStore slice_edges(const InteractionStore& store, EdgeType type) {
    InteractionStore out;
    for (std::size_t i = 0; i < store.interaction_count(); ++i) {
        if (store.edges()[i].type == type) out.add(store.interaction(i));
    }
    out.freeze();
    return out;
}

}  // namespace trirec
