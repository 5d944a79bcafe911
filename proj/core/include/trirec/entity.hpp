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

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace trirec {

/// The three entity kinds of a data market.
enum class EntityKind : std::uint8_t { User = 0, Dataset = 1, Service = 2 };

constexpr int kEntityKindCount = 3;

std::string_view to_string(EntityKind kind);

/// Parses the lowercase tokens "user", "dataset", "service".
/// Returns nullopt for anything else.
std::optional<EntityKind> parse_entity_kind(std::string_view token);

/// Typed identity of one user, dataset, or service. Ids are opaque
/// strings, unique within a kind but free to repeat across kinds.
struct EntityRef {
    EntityKind kind;
    std::string id;

    friend bool operator==(const EntityRef& a, const EntityRef& b) {
        return a.kind == b.kind && a.id == b.id;
    }
    friend bool operator<(const EntityRef& a, const EntityRef& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.id < b.id;
    }
};

inline EntityRef user(std::string id) { return {EntityKind::User, std::move(id)}; }
inline EntityRef dataset(std::string id) { return {EntityKind::Dataset, std::move(id)}; }
inline EntityRef service(std::string id) { return {EntityKind::Service, std::move(id)}; }

/// "user:u1" style label used in diagnostics and reports.
std::string to_string(const EntityRef& e);

/// The three admissible directed edge shapes. Raw interactions are
/// User->Dataset and User->Service; Dataset->Service edges come from
/// the projection (or are loaded explicitly from a projected file).
enum class EdgeType : std::uint8_t {
    UserDataset = 0,
    UserService = 1,
    DatasetService = 2,
};

constexpr int kEdgeTypeCount = 3;

std::string_view to_string(EdgeType type);

/// Classifies a (source kind, target kind) pair; nullopt if the pair
/// is not one of the three admissible shapes.
std::optional<EdgeType> edge_type_of(EntityKind source, EntityKind target);

constexpr EntityKind source_kind_of(EdgeType type) {
    return type == EdgeType::DatasetService ? EntityKind::Dataset : EntityKind::User;
}

constexpr EntityKind target_kind_of(EdgeType type) {
    return type == EdgeType::UserDataset ? EntityKind::Dataset : EntityKind::Service;
}

/// One directed interaction edge. Weight defaults to 1 (implicit
/// unary feedback); the timestamp is optional epoch seconds.
struct Interaction {
    EntityRef source;
    EntityRef target;
    double weight = 1.0;
    std::optional<std::int64_t> timestamp;
};

/// Thrown on invariant violations in the interaction graph (invalid
/// kind pair, malformed id, non-positive weight, frozen-store writes).
class StoreError : public std::runtime_error {
public:
    explicit StoreError(const std::string& message) : std::runtime_error(message) {}
};

/// Ids must be non-empty and free of whitespace; the canonical file
/// format additionally rules out commas.
bool valid_entity_id(std::string_view id);

}  // namespace trirec

template <>
struct std::hash<trirec::EntityRef> {
    std::size_t operator()(const trirec::EntityRef& e) const noexcept {
        std::size_t h = std::hash<std::string>{}(e.id);
        return h ^ (static_cast<std::size_t>(e.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
