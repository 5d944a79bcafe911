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

#include "trirec/entity.hpp"

#include <cctype>

namespace trirec {

std::string_view to_string(EntityKind kind) {
    switch (kind) {
        case EntityKind::User: return "user";
        case EntityKind::Dataset: return "dataset";
        case EntityKind::Service: return "service";
    }
    return "?";
}

std::optional<EntityKind> parse_entity_kind(std::string_view token) {
    if (token == "user") return EntityKind::User;
    if (token == "dataset") return EntityKind::Dataset;
    if (token == "service") return EntityKind::Service;
    return std::nullopt;
}

std::string to_string(const EntityRef& e) {
    std::string out(to_string(e.kind));
    out += ':';
    out += e.id;
    return out;
}

std::string_view to_string(EdgeType type) {
    switch (type) {
        case EdgeType::UserDataset: return "user/dataset";
        case EdgeType::UserService: return "user/service";
        case EdgeType::DatasetService: return "dataset/service";
    }
    return "?";
}

std::optional<EdgeType> edge_type_of(EntityKind source, EntityKind target) {
    if (source == EntityKind::User && target == EntityKind::Dataset) return EdgeType::UserDataset;
    if (source == EntityKind::User && target == EntityKind::Service) return EdgeType::UserService;
    if (source == EntityKind::Dataset && target == EntityKind::Service) return EdgeType::DatasetService;
    return std::nullopt;
}

bool valid_entity_id(std::string_view id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (std::isspace(c) || c == ',') return false;
    }
    return true;
}

}  // namespace trirec
