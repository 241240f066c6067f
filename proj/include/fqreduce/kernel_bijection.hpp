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

#ifndef FQREDUCE_KERNEL_BIJECTION_HPP
#define FQREDUCE_KERNEL_BIJECTION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fqreduce/gf.hpp"
#include "fqreduce/space.hpp"
#include "fqreduce/table.hpp"

namespace fqr {

/// Dense row-major matrix over GF(q).
class Matrix {
   public:
    Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);
    Matrix(FieldSpec spec, std::vector<Row> rows);

    static Matrix identity(FieldSpec spec, std::size_t n);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const FieldElement& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
    FieldElement& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
    Row row(std::size_t r) const;

    /// M * v for a column vector v of length cols().
    Row apply(std::span<const FieldElement> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.spec_ == b.spec_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElement> data_;
};

/// One `[a, b, c]` line per row.
std::string to_string(const Matrix& m);

/// Reduced row echelon form with the list of pivot columns (one per nonzero row).
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Pivot choice: first nonzero entry at or below the
/// current row, scanning columns left to right.
Echelon row_reduce(Matrix a);

/**
 * @brief A rank-n reduced-row-echelon matrix with n rows and n+1 columns.
 *
 * Such a matrix has exactly one non-pivot column, say column i (0-based
 * here). Its dense form is the identity on the other n columns, and
 * column i carries the free entries a_0..a_{i-1} in rows 0..i-1 followed by
 * zeros. Only i and the free entries are stored.
 */
class RrefMatrix {
   public:
    RrefMatrix(FieldSpec spec, std::size_t n, std::size_t nonpivot_column, std::vector<FieldElement> free_entries);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t n() const noexcept { return n_; }
    /// 0-based index of the column without pivot, in [0, n].
    std::size_t nonpivot_column() const noexcept { return nonpivot_; }
    const std::vector<FieldElement>& free_entries() const noexcept { return free_; }

    Matrix dense() const;
    /// Position in the enumerate_rref() order; a perfect hash over M_n.
    std::uint64_t canonical_rank() const;

    friend bool operator==(const RrefMatrix& a, const RrefMatrix& b) {
        return a.spec_ == b.spec_ && a.n_ == b.n_ && a.nonpivot_ == b.nonpivot_ && a.free_ == b.free_;
    }

   private:
    FieldSpec spec_;
    std::size_t n_;
    std::size_t nonpivot_;
    std::vector<FieldElement> free_;
};

/// The unique M in M_n with M x^T = 0. Throws UsageError unless x is canonical.
RrefMatrix matrix_for_point(const ProjectivePoint& x);
/// The unique canonical x with M x^T = 0.
ProjectivePoint point_for_matrix(const RrefMatrix& m);

/**
 * @brief Lazy stream over M_n in canonical order.
 *
 * Order: non-pivot column ascending, then free entries lexicographically by
 * element index (first entry most significant). Iterating touches only the
 * matrices actually visited.
 */
class RrefRange {
   public:
    RrefRange(std::size_t n, FieldSpec spec);

    class iterator {
       public:
        using value_type = RrefMatrix;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        const RrefMatrix& operator*() const { return *current_; }
        const RrefMatrix* operator->() const { return &*current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) noexcept { return !it.current_; }

       private:
        friend class RrefRange;
        iterator(std::size_t n, FieldSpec spec);
        void materialize();

        std::size_t n_ = 0;
        std::optional<FieldSpec> spec_;
        std::size_t column_ = 0;
        std::vector<std::uint32_t> digits_;
        std::optional<RrefMatrix> current_;
    };

    iterator begin() const { return iterator(n_, spec_); }
    std::default_sentinel_t end() const noexcept { return {}; }
    /// |M_n| = (q^(n+1)-1)/(q-1).
    std::uint64_t size() const { return projective_count(n_, spec_.q()); }

   private:
    std::size_t n_;
    FieldSpec spec_;
};

inline RrefRange enumerate_rref(std::size_t n, const FieldSpec& spec) { return RrefRange(n, spec); }

/// Compressed form of `a` if it is an n x (n+1) RREF matrix of rank n.
std::optional<RrefMatrix> as_rref_matrix(const Matrix& a);
inline bool is_rref_rank_full(const Matrix& a) { return as_rref_matrix(a).has_value(); }

/// Nonzero x with A x^T = 0 for an n x (n+1) matrix A. The first free column
/// of the echelon form is set to 1 and the other free columns to 0.
Row right_kernel_vector(const Matrix& a);

struct RrefFactorization {
    Matrix b;       // n x n
    RrefMatrix m;   // member of M_n
};

/// A = B M with M in M_n. When rank(A) < n the pivot set is completed with
/// the smallest missing columns.
RrefFactorization rref_factor(const Matrix& a);

}  // namespace fqr

template <>
struct std::hash<fqr::RrefMatrix> {
    std::size_t operator()(const fqr::RrefMatrix& m) const { return std::hash<std::uint64_t>{}(m.canonical_rank()); }
};

#endif  // FQREDUCE_KERNEL_BIJECTION_HPP
