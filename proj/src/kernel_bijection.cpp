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

#include "fqreduce/kernel_bijection.hpp"

#include <algorithm>
#include <limits>

#include "fqreduce/errors.hpp"

namespace fqr {

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, spec.zero()) {
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
}

Matrix::Matrix(FieldSpec spec, std::vector<Row> rows) : spec_(spec), rows_(rows.size()), cols_(0) {
    if (rows.empty() || rows.front().empty()) throw UsageError("matrix dimensions must be positive");
    cols_ = rows.front().size();
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw UsageError("ragged matrix rows");
        for (auto& v : r) {
            if (!(v.spec() == spec_)) throw UsageError("matrix entry from a different field");
            data_.push_back(std::move(v));
        }
    }
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
    Matrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = spec.one();
    return m;
}

Row Matrix::row(std::size_t r) const {
    if (r >= rows_) throw UsageError("row index out of range");
    return Row(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Row Matrix::apply(std::span<const FieldElement> v) const {
    if (v.size() != cols_) throw UsageError("vector length does not match matrix columns");
    Row out(rows_, spec_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& e = at(r, c);
            if (!e.is_zero()) out[r] += e * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.spec_ == b.spec_)) throw UsageError("matrices over different fields");
    if (a.cols_ != b.rows_) throw UsageError("matrix dimensions do not agree for multiplication");
    Matrix out(a.spec_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& e = a.at(i, k);
            if (e.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += e * b.at(k, j);
        }
    }
    return out;
}

std::string to_string(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += to_string(m.at(r, c));
        }
        s += "]\n";
    }
    return s;
}

Echelon row_reduce(Matrix a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t sel = row;
        while (sel < a.rows() && a.at(sel, col).is_zero()) ++sel;
        if (sel == a.rows()) continue;
        if (sel != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(sel, c), a.at(row, c));
        }
        const FieldElement inv = a.at(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col).is_zero()) continue;
            const FieldElement factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(a), std::move(pivots)};
}

RrefMatrix::RrefMatrix(FieldSpec spec, std::size_t n, std::size_t nonpivot_column, std::vector<FieldElement> free_entries)
    : spec_(spec), n_(n), nonpivot_(nonpivot_column), free_(std::move(free_entries)) {
    if (n_ == 0) throw UsageError("RREF matrix needs n >= 1");
    if (nonpivot_ > n_) throw UsageError("non-pivot column out of range");
    if (free_.size() != nonpivot_) throw UsageError("free entry count must equal the non-pivot column index");
    for (const auto& e : free_) {
        if (!(e.spec() == spec_)) throw UsageError("free entry from a different field");
    }
}

Matrix RrefMatrix::dense() const {
    Matrix m(spec_, n_, n_ + 1);
    for (std::size_t r = 0; r < n_; ++r) {
        if (r < nonpivot_) {
            m.at(r, r) = spec_.one();
            m.at(r, nonpivot_) = free_[r];
        } else {
            m.at(r, r + 1) = spec_.one();
        }
    }
    return m;
}

std::uint64_t RrefMatrix::canonical_rank() const {
    const std::uint64_t q = spec_.q();
    // matrices with a smaller non-pivot column come first: sum_{j<i} q^j of them
    std::uint64_t rank = nonpivot_ == 0 ? 0 : projective_count(nonpivot_ - 1, q);
    std::uint64_t local = 0;
    for (const auto& e : free_) local = local * q + e.index();
    return rank + local;
}

RrefMatrix matrix_for_point(const ProjectivePoint& x) {
    const auto& c = x.coords();
    if (!is_canonical(c)) throw UsageError("matrix_for_point needs a canonical point");
    const std::size_t i = x.last_nonzero();
    std::vector<FieldElement> free;
    free.reserve(i);
    for (std::size_t j = 0; j < i; ++j) free.push_back(-c[j]);
    return RrefMatrix(c.front().spec(), x.dimension(), i, std::move(free));
}

ProjectivePoint point_for_matrix(const RrefMatrix& m) {
    const auto& spec = m.spec();
    std::vector<FieldElement> x(m.n() + 1, spec.zero());
    for (std::size_t j = 0; j < m.nonpivot_column(); ++j) x[j] = -m.free_entries()[j];
    x[m.nonpivot_column()] = spec.one();
    return canonicalize(x);
}

RrefRange::RrefRange(std::size_t n, FieldSpec spec) : n_(n), spec_(spec) {
    if (n == 0) throw UsageError("RREF enumeration needs n >= 1");
}

RrefRange::iterator::iterator(std::size_t n, FieldSpec spec) : n_(n), spec_(spec) { materialize(); }

void RrefRange::iterator::materialize() {
    std::vector<FieldElement> free;
    free.reserve(digits_.size());
    for (auto d : digits_) free.push_back(spec_->element(d));
    current_.emplace(*spec_, n_, column_, std::move(free));
}

RrefRange::iterator& RrefRange::iterator::operator++() {
    if (!current_) return *this;
    const std::uint32_t q = spec_->q();
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < q) {
            materialize();
            return *this;
        }
        digits_[i] = 0;
    }
    // free entries wrapped: move on to the next non-pivot column
    if (++column_ > n_) {
        current_.reset();
        return *this;
    }
    digits_.assign(column_, 0);
    materialize();
    return *this;
}

std::optional<RrefMatrix> as_rref_matrix(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n + 1) return std::nullopt;
    // Row r must lead with a 1 at column r (before the gap) or r+1 (after it).
    std::optional<std::size_t> gap;
    std::vector<std::size_t> pivot(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t lead = 0;
        while (lead < a.cols() && a.at(r, lead).is_zero()) ++lead;
        if (lead == a.cols() || !a.at(r, lead).is_one()) return std::nullopt;
        const std::size_t expected = gap ? r + 1 : r;
        if (lead == r + 1 && !gap) {
            gap = r;
        } else if (lead != expected) {
            return std::nullopt;
        }
        pivot[r] = lead;
    }
    const std::size_t nonpivot = gap.value_or(n);
    // pivot columns must be unit vectors
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t rr = 0; rr < n; ++rr) {
            if (rr != r && !a.at(rr, pivot[r]).is_zero()) return std::nullopt;
        }
    }
    // column `nonpivot` below its free entries is forced to zero by the leading-entry check
    std::vector<FieldElement> free;
    for (std::size_t r = 0; r < nonpivot; ++r) free.push_back(a.at(r, nonpivot));
    return RrefMatrix(a.spec(), n, nonpivot, std::move(free));
}

Row right_kernel_vector(const Matrix& a) {
    if (a.cols() != a.rows() + 1) throw UsageError("expected an n x (n+1) matrix");
    const auto [reduced, pivots] = row_reduce(a);
    std::size_t free_col = 0;
    for (std::size_t k = 0; k < pivots.size() && pivots[k] == free_col; ++k) ++free_col;
    const auto& spec = a.spec();
    Row x(a.cols(), spec.zero());
    x[free_col] = spec.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -reduced.at(r, free_col);
    return x;
}

RrefFactorization rref_factor(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n + 1) throw UsageError("expected an n x (n+1) matrix");
    const auto& spec = a.spec();
    auto [reduced, pivots] = row_reduce(a);

    std::vector<Row> rows;
    for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(reduced.row(r));
    // complete the pivot set with unit rows at the smallest missing columns
    for (std::size_t c = 0; rows.size() < n; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        Row e(n + 1, spec.zero());
        e[c] = spec.one();
        rows.push_back(std::move(e));
    }
    const Echelon completed = row_reduce(Matrix(spec, std::move(rows)));
    auto m = as_rref_matrix(completed.reduced);
    if (!m) throw VerificationFailure("pivot completion did not produce a rank-n RREF matrix");

    // each row of A lies in the row space of M; its coordinates are its entries at the pivot columns
    Matrix b(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t r = 0; r < n; ++r) b.at(i, r) = a.at(i, completed.pivots[r]);
    }
    return RrefFactorization{std::move(b), std::move(*m)};
}

}  // namespace fqr
