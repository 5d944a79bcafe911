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

#include "trirec/ingest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "trirec/config.hpp"
#include "trirec/csv.hpp"

namespace trirec {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return fields;
}

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

double parse_weight(std::string_view text, const std::string& name, std::size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail(name, line, "bad weight: '" + std::string(text) + "'");
    }
    return value;
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    unsigned yoe = static_cast<unsigned>(y - era * 400);
    unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2) / 5 +
                   static_cast<unsigned>(d) - 1;
    unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::optional<std::int64_t> parse_timestamp_token(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // plain integer epoch seconds
    {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size()) return value;
    }
    // "YYYY-MM-DD" or "YYYY-MM-DD HH:MM:SS"
    if (text.size() >= 10 && text[4] == '-' && text[7] == '-') {
        auto num = [&](std::size_t pos, std::size_t len, int& out) {
            auto sub = text.substr(pos, len);
            auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), out);
            return ec == std::errc{} && ptr == sub.data() + sub.size();
        };
        int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
        if (!num(0, 4, y) || !num(5, 2, mo) || !num(8, 2, d)) return std::nullopt;
        if (text.size() >= 19 && (text[10] == ' ' || text[10] == 'T')) {
            if (!num(11, 2, h) || !num(14, 2, mi) || !num(17, 2, s)) return std::nullopt;
        } else if (text.size() != 10) {
            return std::nullopt;
        }
        return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + s;
    }
    return std::nullopt;
}

}  // namespace

InteractionStore load_canonical_stream(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(name + ": empty file, expected header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCanonicalHeader) {
        throw ParseError(name + ":1: bad header, expected '" + std::string(kCanonicalHeader) + "'");
    }

    InteractionStore store;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_fields(line);
        if (fields.size() < 4 || fields.size() > 6) {
            fail(name, line_number,
                 "expected 4-6 fields, got " + std::to_string(fields.size()));
        }
        auto source_kind = parse_entity_kind(fields[0]);
        if (!source_kind) fail(name, line_number, "bad source kind: '" + std::string(fields[0]) + "'");
        auto target_kind = parse_entity_kind(fields[2]);
        if (!target_kind) fail(name, line_number, "bad target kind: '" + std::string(fields[2]) + "'");

        Interaction interaction;
        interaction.source = EntityRef{*source_kind, std::string(fields[1])};
        interaction.target = EntityRef{*target_kind, std::string(fields[3])};
        if (fields.size() >= 5 && !fields[4].empty()) {
            interaction.weight = parse_weight(fields[4], name, line_number);
        }
        if (fields.size() >= 6 && !fields[5].empty()) {
            auto ts = parse_timestamp_token(fields[5]);
            if (!ts) fail(name, line_number, "bad timestamp: '" + std::string(fields[5]) + "'");
            interaction.timestamp = *ts;
        }
        try {
            store.add(interaction);
        } catch (const StoreError& e) {
            fail(name, line_number, e.what());
        }
    }
    store.freeze();
    return store;
}

InteractionStore load_canonical(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    return load_canonical_stream(in, path);
}

std::string export_canonical_string(const InteractionStore& store) {
    std::string out(kCanonicalHeader);
    out += '\n';
    char buffer[64];
    for (const auto& edge : store.edges()) {
        const EntityRef& s = store.entity(edge.source);
        const EntityRef& t = store.entity(edge.target);
        out += to_string(s.kind);
        out += ',';
        out += s.id;
        out += ',';
        out += to_string(t.kind);
        out += ',';
        out += t.id;
        out += ',';
        auto [wend, wec] = std::to_chars(buffer, buffer + sizeof buffer, edge.weight);
        out.append(buffer, wend);
        out += ',';
        if (edge.timestamp) {
            auto [tend, tec] = std::to_chars(buffer, buffer + sizeof buffer, *edge.timestamp);
            out.append(buffer, tend);
        }
        out += '\n';
    }
    return out;
}

void export_canonical(const InteractionStore& store, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << export_canonical_string(store);
    if (!out) throw std::runtime_error("write failed: " + path);
}

StoreStatistics compute_statistics(const InteractionStore& store) {
    StoreStatistics stats;
    stats.users = store.entity_count(EntityKind::User);
    stats.datasets = store.entity_count(EntityKind::Dataset);
    stats.services = store.entity_count(EntityKind::Service);
    stats.user_dataset = store.edge_type_count(EdgeType::UserDataset);
    stats.user_service = store.edge_type_count(EdgeType::UserService);
    stats.dataset_service = store.edge_type_count(EdgeType::DatasetService);
    return stats;
}

MetaKaggleMapping load_meta_kaggle_mapping(const std::string& path) {
    ConfigFile config = ConfigFile::parse_file(path);
    auto require = [&](const std::string& section, const std::string& key) {
        auto v = config.get(section, key);
        if (!v || v->empty()) {
            throw ParseError(path + ": missing mapping key " + section + "." + key);
        }
        return *v;
    };
    MetaKaggleMapping mapping;
    mapping.forum_user_column = require("forum", "user_column");
    mapping.forum_dataset_column = require("forum", "dataset_column");
    mapping.forum_timestamp_column = config.get_or("forum", "timestamp_column", "");
    mapping.votes_user_column = require("votes", "user_column");
    mapping.votes_service_column = require("votes", "service_column");
    mapping.votes_timestamp_column = config.get_or("votes", "timestamp_column", "");
    return mapping;
}

namespace {

struct ColumnIndexes {
    std::size_t user = 0;
    std::size_t other = 0;
    std::optional<std::size_t> timestamp;
};

ColumnIndexes resolve_columns(const std::vector<std::string>& header, const std::string& user_col,
                              const std::string& other_col, const std::string& ts_col,
                              const std::string& path) {
    auto index_of = [&](const std::string& column) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == column) return i;
        }
        return std::nullopt;
    };
    ColumnIndexes idx;
    auto u = index_of(user_col);
    if (!u) throw ParseError(path + ": missing column '" + user_col + "'");
    auto o = index_of(other_col);
    if (!o) throw ParseError(path + ": missing column '" + other_col + "'");
    idx.user = *u;
    idx.other = *o;
    if (!ts_col.empty()) {
        auto t = index_of(ts_col);
        if (!t) throw ParseError(path + ": missing column '" + ts_col + "'");
        idx.timestamp = *t;
    }
    return idx;
}

void adapt_file(InteractionStore& store, const std::string& path, EntityKind other_kind,
                const std::string& user_col, const std::string& other_col,
                const std::string& ts_col) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields)) throw ParseError(path + ": empty file, expected header");
    ColumnIndexes idx = resolve_columns(fields, user_col, other_col, ts_col, path);

    while (reader.next(fields)) {
        if (fields.size() <= std::max(idx.user, idx.other)) continue;
        const std::string& user_id = fields[idx.user];
        const std::string& other_id = fields[idx.other];
        // tolerate blank cells in real-world snapshots
        if (user_id.empty() || other_id.empty()) continue;
        Interaction interaction;
        interaction.source = EntityRef{EntityKind::User, user_id};
        interaction.target = EntityRef{other_kind, other_id};
        if (idx.timestamp && *idx.timestamp < fields.size()) {
            interaction.timestamp = parse_timestamp_token(fields[*idx.timestamp]);
        }
        try {
            store.add(interaction);
        } catch (const StoreError& e) {
            fail(path, reader.line(), e.what());
        }
    }
}

}  // namespace

InteractionStore adapt_meta_kaggle(const std::string& forum_path, const std::string& votes_path,
                                   const MetaKaggleMapping& mapping) {
    InteractionStore store;
    adapt_file(store, forum_path, EntityKind::Dataset, mapping.forum_user_column,
               mapping.forum_dataset_column, mapping.forum_timestamp_column);
    if (!votes_path.empty()) {
        adapt_file(store, votes_path, EntityKind::Service, mapping.votes_user_column,
                   mapping.votes_service_column, mapping.votes_timestamp_column);
    }
    store.freeze();
    return store;
}

}  // namespace trirec
