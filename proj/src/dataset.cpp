// Copyright 2026 The renyi-slocc Authors
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


#include "renyi/dataset.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace renyi {

namespace {

std::string schema_line(const Dataset &data) {
    return "renyi-slocc/" + data.name + "/v" + kSchemaVersion;
}

std::string meta_value(const nlohmann::ordered_json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        return format_number(v.get<double>());
    }
    return v.dump();
}

std::string render(const Cell &cell) {
    if (const double *v = std::get_if<double>(&cell)) {
        return format_number(*v);
    }
    return std::get<std::string>(cell);
}

}  // namespace

void Dataset::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, expected " +
                                    std::to_string(columns.size()));
    }
    rows.push_back(std::move(row));
}

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "unbounded" : "-unbounded";
    }
    if (value == 0) {
        return "0";
    }
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, kSignificantDigits);
    std::string s(buf, result.ptr);
    // Trim trailing zeros of the mantissa ("0.500000000000" -> "0.5").
    auto exp_pos = s.find_first_of("eE");
    std::string mantissa = s.substr(0, exp_pos);
    std::string exponent = exp_pos == std::string::npos ? "" : s.substr(exp_pos);
    if (mantissa.find('.') != std::string::npos) {
        while (!mantissa.empty() && mantissa.back() == '0') {
            mantissa.pop_back();
        }
        if (!mantissa.empty() && mantissa.back() == '.') {
            mantissa.pop_back();
        }
    }
    return mantissa + exponent;
}

nlohmann::ordered_json json_number(double value) {
    if (!std::isfinite(value)) {
        return format_number(value);
    }
    std::string text = format_number(value);
    double rounded = 0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

void write_csv(std::ostream &out, const Dataset &data) {
    out << "# schema: " << schema_line(data) << '\n';
    for (const auto &[key, value] : data.meta.items()) {
        out << "# " << key << '=' << meta_value(value) << '\n';
    }
    for (std::size_t i = 0; i < data.columns.size(); ++i) {
        out << (i ? "," : "") << data.columns[i];
    }
    out << '\n';
    for (const auto &row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << render(row[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream &out, const Dataset &data) {
    nlohmann::ordered_json doc;
    doc["schema"] = schema_line(data);
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto &[key, value] : data.meta.items()) {
        meta[key] = value.is_number_float() ? json_number(value.get<double>()) : value;
    }
    doc["meta"] = std::move(meta);
    doc["columns"] = data.columns;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : data.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto &cell : row) {
            if (const double *v = std::get_if<double>(&cell)) {
                r.push_back(json_number(*v));
            } else {
                r.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

}  // namespace renyi
