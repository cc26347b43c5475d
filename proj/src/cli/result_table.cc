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

#include "lrqc/cli/result_table.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace lrqc::cli {

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell_text(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const {
            return "";
        }
        std::string operator()(int64_t v) const {
            return std::to_string(v);
        }
        std::string operator()(double v) const {
            return format_double(v);
        }
        std::string operator()(const std::string &v) const {
            return csv_field(v);
        }
        std::string operator()(bool v) const {
            return v ? "true" : "false";
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::json cell_json(const Cell &cell) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const {
            return nullptr;
        }
        nlohmann::json operator()(int64_t v) const {
            return v;
        }
        nlohmann::json operator()(double v) const {
            if (!std::isfinite(v)) {
                return format_double(v);
            }
            return v;
        }
        nlohmann::json operator()(const std::string &v) const {
            return v;
        }
        nlohmann::json operator()(bool v) const {
            return v;
        }
    };
    return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument(
            "row has " + std::to_string(row.size()) + " cells, table has " + std::to_string(columns_.size()) +
            " columns");
    }
    rows_.push_back(std::move(row));
}

std::vector<Cell> ResultTable::column(const std::string &name) const {
    for (size_t c = 0; c < columns_.size(); c++) {
        if (columns_[c] == name) {
            std::vector<Cell> out;
            for (const auto &row : rows_) {
                out.push_back(row[c]);
            }
            return out;
        }
    }
    throw std::out_of_range("no column named " + name);
}

std::string ResultTable::to_csv() const {
    std::string out;
    for (size_t c = 0; c < columns_.size(); c++) {
        out += (c ? "," : "") + csv_field(columns_[c]);
    }
    out += '\n';
    for (const auto &row : rows_) {
        for (size_t c = 0; c < row.size(); c++) {
            out += (c ? "," : "") + cell_text(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string ResultTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : rows_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &cell : row) {
            r.push_back(cell_json(cell));
        }
        rows.push_back(std::move(r));
    }
    nlohmann::json doc{{"metadata", metadata}, {"columns", columns_}, {"rows", std::move(rows)}};
    return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot open " + tmp + " for writing");
        }
        f << contents;
        f.flush();
        if (!f) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
    }
}

}  // namespace lrqc::cli
