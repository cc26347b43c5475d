// Copyright 2026 The lrqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LRQC_CLI_RESULT_TABLE_H
#define LRQC_CLI_RESULT_TABLE_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace lrqc::cli {

/// An empty cell is written as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, int64_t, double, std::string, bool>;

class ResultTable {
   public:
    explicit ResultTable(std::vector<std::string> columns);

    const std::vector<std::string> &columns() const {
        return columns_;
    }
    const std::vector<std::vector<Cell>> &rows() const {
        return rows_;
    }
    /// Throws std::invalid_argument unless the row has one cell per column.
    void add_row(std::vector<Cell> row);

    /// Column by name; throws std::out_of_range for unknown names.
    std::vector<Cell> column(const std::string &name) const;

    nlohmann::json metadata;

    /// Header plus rows, '\n' line endings, doubles as %.17g.
    std::string to_csv() const;
    /// {"metadata": ..., "columns": [...], "rows": [[...], ...]}.
    std::string to_json() const;

   private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

std::string format_double(double x);

/// Writes to path + ".tmp" and renames over path.
void write_file_atomic(const std::string &path, const std::string &contents);

}  // namespace lrqc::cli

#endif
