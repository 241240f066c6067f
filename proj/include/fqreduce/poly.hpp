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

#ifndef FQREDUCE_POLY_HPP
#define FQREDUCE_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqreduce/gf.hpp"
#include "fqreduce/space.hpp"
#include "fqreduce/table.hpp"

namespace fqr {

/// Exponent vector. Ordered graded-lexicographically: higher total degree
/// first, ties broken lexicographically with larger exponents first.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    std::uint64_t degree() const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Strict weak order placing monomials in printing order (descending grlex).
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Total degree; std::nullopt stands for the zero polynomial's NoDegree.
using Degree = std::optional<std::uint64_t>;
inline constexpr std::nullopt_t kNoDegree = std::nullopt;

/**
 * @brief Sparse multivariate polynomial over GF(q).
 *
 * No stored coefficient is ever zero, so the zero polynomial has no terms.
 */
class MultiPoly {
   public:
    using TermMap = std::map<Monomial, FieldElement, GrlexDescending>;

    MultiPoly(FieldSpec spec, std::size_t nvars) : spec_(spec), nvars_(nvars) {}

    static MultiPoly constant(FieldSpec spec, std::size_t nvars, const FieldElement& c);
    static MultiPoly variable(FieldSpec spec, std::size_t nvars, std::size_t i);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * mon, dropping the term if it cancels.
    void add_term(const Monomial& mon, const FieldElement& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const FieldElement& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const FieldElement& c, MultiPoly a) { return a *= c; }
    /// Full product; used for building test inputs.
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.spec_ == b.spec_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

   private:
    void check_compatible(const MultiPoly& other) const;

    FieldSpec spec_;
    std::size_t nvars_;
    TermMap terms_;
};

/// Parses the ASCII grammar
///   expression = term (('+'|'-') term)*
///   term       = coefficient ('*' factor)* | factor ('*' factor)*
///   factor     = variable ('^' positive-integer)?
/// with coefficients as decimal integers or `{c0,c1,...}` literals.
/// A leading '-' is also accepted. Throws ParseError with a 1-based column.
MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars, const FieldSpec& spec);

/// Canonical printed form; parse_poly(to_string(f)) == f.
std::string to_string(const MultiPoly& f, std::span<const std::string> vars);

FieldElement evaluate(const MultiPoly& f, std::span<const FieldElement> point);
Degree total_degree(const MultiPoly& f);
/// True iff every term has total degree d. The zero polynomial is homogeneous of every degree.
bool is_homogeneous(const MultiPoly& f, std::uint64_t d);
/// True iff f is homogeneous of some degree.
bool is_homogeneous(const MultiPoly& f);

/// sum_i coeffs[i] * fs[i].
MultiPoly linear_combination(std::span<const FieldElement> coeffs, std::span<const MultiPoly> fs);

/// k x |X| table of values; column j is the point with label `labels[j]`.
SystemTable value_table(std::span<const MultiPoly> fs, std::span<const std::vector<FieldElement>> points,
                        std::vector<std::string> labels);
SystemTable value_table(std::span<const MultiPoly> fs, std::span<const AffinePoint> points);
/// Evaluation at canonical representatives.
SystemTable value_table(std::span<const MultiPoly> fs, std::span<const ProjectivePoint> points);

}  // namespace fqr

#endif  // FQREDUCE_POLY_HPP
