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
#include <map>
#include <optional>
#include <string>

namespace trirec {

/// Minimal INI-style key-value file:
///   [section]
///   key = value        # comment
/// Section and key names are case-sensitive; values keep interior
/// whitespace. Used for recommendation/split settings and adapter
/// column mappings.
class ConfigFile {
public:
    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_string(const std::string& text, const std::string& name = "<string>");

    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       std::string fallback) const;

    /// Typed getters; throw std::invalid_argument naming section.key
    /// when the value does not parse.
    std::optional<std::int64_t> get_int(const std::string& section, const std::string& key) const;
    std::optional<double> get_double(const std::string& section, const std::string& key) const;
    std::optional<bool> get_bool(const std::string& section, const std::string& key) const;

    bool has_section(const std::string& section) const;

private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace trirec
