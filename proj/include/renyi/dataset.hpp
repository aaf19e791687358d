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


#ifndef RENYI_DATASET_HPP
#define RENYI_DATASET_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace renyi {

/// Version tag written into every output header.
inline constexpr const char *kSchemaVersion = "1";
inline constexpr int kSignificantDigits = 12;

/// A numeric value or a marker such as "unbounded" or "infeasible".
using Cell = std::variant<double, std::string>;

struct Dataset {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Run parameters echoed into the output.
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();

    void add_row(std::vector<Cell> row);
};

/// Shortest "%.12g"-style rendering via std::to_chars; locale independent.
/// Non-finite values render as "unbounded", "-unbounded" or "nan".
std::string format_number(double value);

/// `# schema: renyi-slocc/<name>/v1` and `# key=value` lines for meta, then a
/// header row and one comma-separated row per record.
void write_csv(std::ostream &out, const Dataset &data);

/// {"schema", "meta", "columns", "rows"}; numbers rounded to 12 digits.
void write_json(std::ostream &out, const Dataset &data);

/// Number rounded to kSignificantDigits, as a JSON value ("unbounded" for
/// infinities).
nlohmann::ordered_json json_number(double value);

}  // namespace renyi

#endif
