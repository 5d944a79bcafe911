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

#include <istream>
#include <string>
#include <vector>

namespace trirec {

/// Streaming comma-separated reader with RFC-4180 quoting (quoted
/// fields may contain commas, doubled quotes, and newlines). Enough
/// for Meta-Kaggle-shaped exports; the canonical interaction format
/// itself never quotes.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    /// Reads one record into `fields`. Returns false at end of input.
    /// line() reports the 1-based line the record started on.
    bool next(std::vector<std::string>& fields);

    std::size_t line() const { return record_line_; }

private:
    std::istream& in_;
    std::size_t current_line_ = 0;
    std::size_t record_line_ = 0;
};

}  // namespace trirec
