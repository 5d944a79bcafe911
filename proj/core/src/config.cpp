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

#include "trirec/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trirec {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_string(buffer.str(), path);
}

ConfigFile ConfigFile::parse_string(const std::string& text, const std::string& name) {
    ConfigFile config;
    std::istringstream in(text);
    std::string line;
    std::string section;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw std::runtime_error(name + ":" + std::to_string(line_number) +
                                         ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            config.sections_[section];
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(name + ":" + std::to_string(line_number) +
                                     ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::runtime_error(name + ":" + std::to_string(line_number) + ": empty key");
        }
        config.sections_[section][key] = value;
    }
    return config;
}

std::optional<std::string> ConfigFile::get(const std::string& section,
                                           const std::string& key) const {
    auto sit = sections_.find(section);
    if (sit == sections_.end()) return std::nullopt;
    auto kit = sit->second.find(key);
    if (kit == sit->second.end()) return std::nullopt;
    return kit->second;
}

std::string ConfigFile::get_or(const std::string& section, const std::string& key,
                               std::string fallback) const {
    auto v = get(section, key);
    return v ? *v : std::move(fallback);
}

std::optional<std::int64_t> ConfigFile::get_int(const std::string& section,
                                                const std::string& key) const {
    auto v = get(section, key);
    if (!v) return std::nullopt;
    try {
        std::size_t pos = 0;
        std::int64_t value = std::stoll(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("config " + section + "." + key + ": not an integer: " + *v);
    }
}

std::optional<double> ConfigFile::get_double(const std::string& section,
                                             const std::string& key) const {
    auto v = get(section, key);
    if (!v) return std::nullopt;
    try {
        std::size_t pos = 0;
        double value = std::stod(*v, &pos);
        if (pos != v->size()) throw std::invalid_argument("");
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("config " + section + "." + key + ": not a number: " + *v);
    }
}

std::optional<bool> ConfigFile::get_bool(const std::string& section, const std::string& key) const {
    auto v = get(section, key);
    if (!v) return std::nullopt;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw std::invalid_argument("config " + section + "." + key + ": not a boolean: " + *v);
}

bool ConfigFile::has_section(const std::string& section) const {
    return sections_.count(section) > 0;
}

}  // namespace trirec
