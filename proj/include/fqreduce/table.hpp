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

#ifndef FQREDUCE_TABLE_HPP
#define FQREDUCE_TABLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "fqreduce/gf.hpp"

namespace fqr {

using Row = std::vector<FieldElement>;

/**
 * @brief Values of k functions on a finite point set X.
 *
 * Row i is f_i viewed as an element of Map(X, F_q); column j holds the
 * values of all functions at the point labelled `labels()[j]`.
 * Labels are opaque and must be distinct.
 */
class SystemTable {
   public:
    SystemTable(FieldSpec spec, std::vector<std::string> labels, std::vector<Row> rows);

    const FieldSpec& spec() const noexcept { return spec_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t point_count() const noexcept { return labels_.size(); }
    /// Values of every row at point j.
    Row column(std::size_t j) const;
    bool column_is_zero(std::size_t j) const;

    friend bool operator==(const SystemTable& a, const SystemTable& b) {
        return a.spec_ == b.spec_ && a.labels_ == b.labels_ && a.rows_ == b.rows_;
    }

   private:
    FieldSpec spec_;
    std::vector<std::string> labels_;
    std::vector<Row> rows_;
};

}  // namespace fqr

#endif  // FQREDUCE_TABLE_HPP
