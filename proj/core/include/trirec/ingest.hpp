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

#include <iosfwd>
#include <string>

#include "trirec/store.hpp"

namespace trirec {

/// Parse failure; the message carries the file (when known) and the
/// 1-based line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Header of the canonical interaction file. UTF-8, comma-delimited,
/// no quoting (ids may not contain commas or whitespace); weight and
/// timestamp may be empty or omitted entirely.
inline constexpr std::string_view kCanonicalHeader =
    "source_kind,source_id,target_kind,target_id,weight,timestamp";

/// Loads a canonical interaction file. Rows are added in file order
/// and the store is frozen. Throws ParseError (with line number) on a
/// malformed row or invalid kind pair.
InteractionStore load_canonical(const std::string& path);
InteractionStore load_canonical_stream(std::istream& in, const std::string& name = "<stream>");

/// Writes the store back out in the canonical format, in interaction
/// order. Integral weights print without a decimal point; timestamps
/// print as epoch seconds or stay empty.
void export_canonical(const InteractionStore& store, const std::string& path);
std::string export_canonical_string(const InteractionStore& store);

/// The Table-1 shaped summary of a store.
struct StoreStatistics {
    std::size_t users = 0;
    std::size_t datasets = 0;
    std::size_t services = 0;
    std::size_t user_dataset = 0;
    std::size_t user_service = 0;
    std::size_t dataset_service = 0;

    friend bool operator==(const StoreStatistics&, const StoreStatistics&) = default;
};

StoreStatistics compute_statistics(const InteractionStore& store);

/// Column mapping for a Meta-Kaggle-shaped extract. The upstream
/// schema is not normative; callers name the columns that hold the id
/// pairs (and optionally a timestamp: integer epoch seconds or
/// "YYYY-MM-DD[ HH:MM:SS]").
struct MetaKaggleMapping {
    std::string forum_user_column;
    std::string forum_dataset_column;
    std::string forum_timestamp_column;  // optional, empty = none
    std::string votes_user_column;
    std::string votes_service_column;
    std::string votes_timestamp_column;  // optional, empty = none
};

/// Loads the mapping from an INI-style file with [forum] and [votes]
/// sections (keys user_column, dataset_column / service_column,
/// timestamp_column).
MetaKaggleMapping load_meta_kaggle_mapping(const std::string& path);

/// Adapts two CSV extracts into canonical interactions: user->dataset
/// records from the forum file, user->service records from the votes
/// file. Repeated pairs are kept (multigraph); unknown extra columns
/// are ignored. Throws ParseError when a configured column is missing.
InteractionStore adapt_meta_kaggle(const std::string& forum_path, const std::string& votes_path,
                                   const MetaKaggleMapping& mapping);

}  // namespace trirec
