/*
   Copyright 2026 The fqreduce Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fqreduce/table.hpp"

#include <unordered_set>

#include "fqreduce/errors.hpp"

namespace fqr {

SystemTable::SystemTable(FieldSpec spec, std::vector<std::string> labels, std::vector<Row> rows)
    : spec_(spec), labels_(std::move(labels)), rows_(std::move(rows)) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) throw UsageError("duplicate point label '" + l + "'");
    }
    for (const auto& r : rows_) {
        if (r.size() != labels_.size()) throw UsageError("table row length does not match the number of points");
        for (const auto& v : r) {
            if (!(v.spec() == spec_)) throw UsageError("table value from a different field");
        }
    }
}

Row SystemTable::column(std::size_t j) const {
    Row c;
    c.reserve(rows_.size());
    for (const auto& r : rows_) c.push_back(r.at(j));
    return c;
}

bool SystemTable::column_is_zero(std::size_t j) const {
    for (const auto& r : rows_) {
        if (!r.at(j).is_zero()) return false;
    }
    return true;
}

}  // namespace fqr
