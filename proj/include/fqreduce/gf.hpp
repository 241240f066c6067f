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

#ifndef FQREDUCE_GF_HPP
#define FQREDUCE_GF_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fqr {

namespace detail {
struct FieldData;
}

class FieldElement;

/// Largest field order accepted by FieldSpec.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 16;

/**
 * @brief Handle to the finite field GF(p^m) in polynomial-basis representation.
 *
 * Field data is interned: two specs built from the same p and modulus share
 * one immutable record, so copies are cheap and comparison is by identity.
 * Interned records live for the whole program, which makes FieldElement safe
 * to hold on to after the originating FieldSpec goes out of scope.
 */
class FieldSpec {
   public:
    /// GF(p^m) with the default modulus (see default_modulus()).
    FieldSpec(std::uint32_t p, std::uint32_t m = 1);
    /// GF(p^m) with an explicit monic irreducible modulus, constant term first.
    FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p() const noexcept;
    std::uint32_t m() const noexcept;
    std::uint32_t q() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    FieldElement zero() const;
    FieldElement one() const;
    /// Element with the given mixed-radix index; throws UsageError if i >= q.
    FieldElement element(std::uint64_t i) const;
    /// Element with the given polynomial-basis coefficients (length m, each < p).
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    /// Image of an integer in the prime subfield.
    FieldElement from_integer(std::int64_t v) const;

    /// Field literal in the `p`, `p^m modulus {...}` syntax.
    std::string literal() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.data_ == b.data_; }

   private:
    explicit FieldSpec(const detail::FieldData* data) noexcept : data_(data) {}
    const detail::FieldData* data_;

    friend class FieldElement;
};

/// Immutable element of a FieldSpec, stored as its canonical index.
class FieldElement {
   public:
    FieldSpec spec() const noexcept { return FieldSpec(field_); }
    std::uint32_t index() const noexcept { return index_; }
    /// Polynomial-basis coefficients, constant term first, length m.
    std::vector<std::uint32_t> coeffs() const;

    bool is_zero() const noexcept { return index_ == 0; }
    bool is_one() const noexcept { return index_ == 1; }

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.field_ == b.field_ && a.index_ == b.index_;
    }
    /// Canonical total order (by index). Only meaningful within one field.
    friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
        if (a.field_ != b.field_) return a.field_ <=> b.field_;
        return a.index_ <=> b.index_;
    }

   private:
    FieldElement(const detail::FieldData* field, std::uint32_t index) noexcept : field_(field), index_(index) {}

    const detail::FieldData* field_;
    std::uint32_t index_;

    friend class FieldSpec;
};

inline std::uint32_t element_index(const FieldElement& a) noexcept { return a.index(); }
inline FieldElement index_element(const FieldSpec& spec, std::uint64_t i) { return spec.element(i); }

/// All q elements in index order.
std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

/// Smallest monic irreducible polynomial of degree m over F_p in mixed-radix
/// order of its lower coefficients. Degree 1 gives `t`.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

bool is_prime(std::uint64_t n) noexcept;
/// Exhaustive factor search; `poly` is constant term first.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Parses `7`, `2^4`, `2^2 modulus {1,1,1}`. Throws ParseError.
FieldSpec parse_field(std::string_view text);

/// Element literal: decimal integer (reduced into the prime subfield) or
/// `{c0,...}` for extension fields. Throws ParseError.
FieldElement parse_element(const FieldSpec& spec, std::string_view text);

/// Prime fields print as decimal, extension fields as `{c0,...,c(m-1)}`.
std::string to_string(const FieldElement& a);
std::ostream& operator<<(std::ostream& os, const FieldElement& a);

}  // namespace fqr

#endif  // FQREDUCE_GF_HPP
