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

#include "fqreduce/gf.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <ostream>
#include <utility>

#include "fqreduce/errors.hpp"

namespace fqr {

namespace detail {

struct FieldData {
    std::uint32_t p;
    std::uint32_t m;
    std::uint32_t q;
    std::vector<std::uint32_t> modulus;  // length m+1, monic
    // Dense tables for small fields, empty otherwise.
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
};

}  // namespace detail

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

constexpr std::uint32_t kTableLimit = 256;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on integers
    std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t t = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
    }
    if (r0 != 1) throw DivisionByZero();
    std::int64_t r = s0 % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

// Remainder of a modulo b; b must have a nonzero leading coefficient.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint64_t c = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i] % p) % p);
        }
        trim(a);
    }
    return a;
}

std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod(b.back(), p);
    Poly quot(a.size() > db ? a.size() - db : 0, 0);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
        quot[shift] = c;
        for (std::size_t i = 0; i <= db; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - c} * b[i]) % p);
        }
        trim(a);
    }
    trim(quot);
    return {quot, a};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly decode(const detail::FieldData& f, std::uint32_t index) {
    Poly c(f.m, 0);
    for (std::uint32_t i = 0; i < f.m; ++i) {
        c[i] = index % f.p;
        index /= f.p;
    }
    trim(c);
    return c;
}

std::uint32_t encode(const detail::FieldData& f, const Poly& c) {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * f.p + c[i];
    return idx;
}

std::uint32_t raw_add(const detail::FieldData& f, std::uint32_t a, std::uint32_t b) {
    if (f.m == 1) return (a + b) % f.p;
    if (f.p == 2) return a ^ b;
    std::uint32_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        r += ((a % f.p + b % f.p) % f.p) * w;
        a /= f.p;
        b /= f.p;
        w *= f.p;
    }
    return r;
}

std::uint32_t raw_neg(const detail::FieldData& f, std::uint32_t a) {
    if (f.p == 2) return a;
    std::uint32_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < f.m; ++i) {
        r += ((f.p - a % f.p) % f.p) * w;
        a /= f.p;
        w *= f.p;
    }
    return r;
}

std::uint32_t raw_mul(const detail::FieldData& f, std::uint32_t a, std::uint32_t b) {
    if (f.m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % f.p);
    return encode(f, poly_rem(poly_mul(decode(f, a), decode(f, b), f.p), f.modulus, f.p));
}

std::uint32_t raw_inv(const detail::FieldData& f, std::uint32_t a) {
    if (a == 0) throw DivisionByZero();
    if (f.m == 1) return inv_mod(a, f.p);
    // extended Euclid: track s with s*a == r (mod modulus)
    Poly r0 = f.modulus, r1 = decode(f, a);
    Poly s0, s1{1};
    while (!r1.empty()) {
        auto [quot, rem] = poly_divmod(r0, r1, f.p);
        Poly s2 = poly_sub(s0, poly_mul(quot, s1, f.p), f.p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    const std::uint32_t c = inv_mod(r0[0], f.p);
    for (auto& v : s0) v = static_cast<std::uint32_t>(std::uint64_t{v} * c % f.p);
    return encode(f, poly_rem(s0, f.modulus, f.p));
}

void check_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.spec() == b.spec())) throw UsageError("field elements belong to different fields");
}

const detail::FieldData* intern(std::uint32_t p, Poly modulus) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, Poly>, std::unique_ptr<detail::FieldData>> registry;

    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw UsageError("modulus must have degree at least 1");
    for (auto c : modulus) {
        if (c >= p) throw UsageError("modulus coefficient out of range [0, p)");
    }
    if (modulus.back() != 1) throw UsageError("modulus must be monic");
    // every monic linear modulus gives the same prime field
    if (modulus.size() == 2) modulus = {0, 1};
    const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) {
            throw ResourceLimit("field order " + std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^16");
        }
    }

    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, modulus);
    if (auto it = registry.find(key); it != registry.end()) return it->second.get();

    if (m > 1 && !is_irreducible(modulus, p)) throw UsageError("modulus is not irreducible over F_p");

    auto data = std::make_unique<detail::FieldData>();
    data->p = p;
    data->m = m;
    data->q = static_cast<std::uint32_t>(q);
    data->modulus = std::move(modulus);
    if (m > 1 && data->q <= kTableLimit) {
        const std::uint32_t n = data->q;
        data->add_table.resize(std::size_t{n} * n);
        data->mul_table.resize(std::size_t{n} * n);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                data->add_table[a * n + b] = static_cast<std::uint16_t>(raw_add(*data, a, b));
                data->mul_table[a * n + b] = static_cast<std::uint16_t>(raw_mul(*data, a, b));
            }
        }
    }
    auto* raw = data.get();
    registry.emplace(std::move(key), std::move(data));
    return raw;
}

[[noreturn]] void parse_fail(const std::string& what, std::size_t pos) { throw ParseError(what, 0, pos + 1); }

void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::uint64_t parse_uint(std::string_view s, std::size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) parse_fail("expected integer", i);
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
        if (v > (std::uint64_t{1} << 40)) parse_fail("integer too large", i);
        ++i;
    }
    return v;
}

std::vector<std::uint64_t> parse_braced(std::string_view s, std::size_t& i) {
    if (i >= s.size() || s[i] != '{') parse_fail("expected '{'", i);
    ++i;
    std::vector<std::uint64_t> out;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '}') parse_fail("empty coefficient list", i);
    while (true) {
        skip_ws(s, i);
        out.push_back(parse_uint(s, i));
        skip_ws(s, i);
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        if (i < s.size() && s[i] == '}') {
            ++i;
            return out;
        }
        parse_fail("expected ',' or '}'", i);
    }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    // try every monic divisor of degree 1..deg/2
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw UsageError("extension degree must be at least 1");
    if (m == 1) return {0, 1};
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        count *= p;
        if (count > kMaxFieldOrder) throw ResourceLimit("field order exceeds 2^16");
    }
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(m + 1, 0);
        std::uint64_t v = idx;
        for (std::uint32_t i = 0; i < m; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw Error("no irreducible polynomial found");  // unreachable: one always exists
}

FieldSpec::FieldSpec(std::uint32_t p, std::uint32_t m) : data_(intern(p, default_modulus(p, m))) {}

FieldSpec::FieldSpec(std::uint32_t p, std::vector<std::uint32_t> modulus) : data_(intern(p, std::move(modulus))) {}

std::uint32_t FieldSpec::p() const noexcept { return data_->p; }
std::uint32_t FieldSpec::m() const noexcept { return data_->m; }
std::uint32_t FieldSpec::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return data_->modulus; }

FieldElement FieldSpec::zero() const { return FieldElement(data_, 0); }
FieldElement FieldSpec::one() const { return FieldElement(data_, 1); }

FieldElement FieldSpec::element(std::uint64_t i) const {
    if (i >= data_->q) throw UsageError("element index " + std::to_string(i) + " out of range for q = " + std::to_string(data_->q));
    return FieldElement(data_, static_cast<std::uint32_t>(i));
}

FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != data_->m) throw UsageError("coefficient vector must have length m");
    std::uint32_t idx = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= data_->p) throw UsageError("coefficient out of range [0, p)");
        idx = idx * data_->p + coeffs[i];
    }
    return FieldElement(data_, idx);
}

FieldElement FieldSpec::from_integer(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(data_->p);
    if (r < 0) r += data_->p;
    return FieldElement(data_, static_cast<std::uint32_t>(r));
}

std::string FieldSpec::literal() const {
    if (data_->m == 1) return std::to_string(data_->p);
    std::string s = std::to_string(data_->p) + "^" + std::to_string(data_->m) + " modulus {";
    for (std::size_t i = 0; i < data_->modulus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(data_->modulus[i]);
    }
    return s + "}";
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
    std::vector<std::uint32_t> c(field_->m, 0);
    std::uint32_t v = index_;
    for (auto& x : c) {
        x = v % field_->p;
        v /= field_->p;
    }
    return c;
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, raw_neg(*field_, index_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, raw_inv(*field_, index_)); }

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement result(field_, 1), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const auto& f = *a.field_;
    if (!f.add_table.empty()) return FieldElement(a.field_, f.add_table[a.index_ * f.q + b.index_]);
    return FieldElement(a.field_, raw_add(f, a.index_, b.index_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const auto& f = *a.field_;
    if (!f.mul_table.empty()) return FieldElement(a.field_, f.mul_table[a.index_ * f.q + b.index_]);
    return FieldElement(a.field_, raw_mul(f, a.index_, b.index_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a * b.inverse();
}

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
    std::vector<FieldElement> out;
    out.reserve(spec.q());
    for (std::uint32_t i = 0; i < spec.q(); ++i) out.push_back(spec.element(i));
    return out;
}

FieldSpec parse_field(std::string_view text) {
    std::size_t i = 0;
    skip_ws(text, i);
    const std::size_t p_pos = i;
    const std::uint64_t p = parse_uint(text, i);
    std::uint64_t m = 1;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws(text, i);
        m = parse_uint(text, i);
        if (m == 0) parse_fail("extension degree must be at least 1", i - 1);
        skip_ws(text, i);
    }
    if (!is_prime(p)) parse_fail("field characteristic " + std::to_string(p) + " is not prime", p_pos);
    if (p > kMaxFieldOrder || m > 16) parse_fail("field order exceeds 2^16", p_pos);

    std::optional<Poly> modulus;
    if (i < text.size() && text[i] != '{') {
        constexpr std::string_view kw = "modulus";
        if (text.substr(i, kw.size()) != kw) parse_fail("expected 'modulus' or end of field literal", i);
        i += kw.size();
        skip_ws(text, i);
        const std::size_t brace = i;
        auto coeffs = parse_braced(text, i);
        if (coeffs.size() != m + 1) parse_fail("modulus must have m+1 coefficients", brace);
        Poly poly;
        for (auto c : coeffs) {
            if (c >= p) parse_fail("modulus coefficient out of range [0, p)", brace);
            poly.push_back(static_cast<std::uint32_t>(c));
        }
        if (poly.back() != 1) parse_fail("modulus must be monic", brace);
        if (m > 1 && !is_irreducible(poly, static_cast<std::uint32_t>(p))) parse_fail("modulus is not irreducible", brace);
        modulus = std::move(poly);
        skip_ws(text, i);
    }
    if (i != text.size()) parse_fail("unexpected trailing input in field literal", i);
    if (modulus) return FieldSpec(static_cast<std::uint32_t>(p), std::move(*modulus));
    return FieldSpec(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m));
}

FieldElement parse_element(const FieldSpec& spec, std::string_view text) {
    std::size_t i = 0;
    skip_ws(text, i);
    FieldElement result = spec.zero();
    if (i < text.size() && text[i] == '{') {
        const std::size_t brace = i;
        auto coeffs = parse_braced(text, i);
        if (coeffs.size() > spec.m()) parse_fail("too many coefficients for field element", brace);
        std::vector<std::uint32_t> c(spec.m(), 0);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] >= spec.p()) parse_fail("coefficient out of range [0, p)", brace);
            c[k] = static_cast<std::uint32_t>(coeffs[k]);
        }
        result = spec.from_coeffs(c);
    } else {
        bool negative = false;
        if (i < text.size() && text[i] == '-') {
            negative = true;
            ++i;
        }
        const auto v = static_cast<std::int64_t>(parse_uint(text, i));
        result = spec.from_integer(negative ? -v : v);
    }
    skip_ws(text, i);
    if (i != text.size()) parse_fail("unexpected trailing input in element literal", i);
    return result;
}

std::string to_string(const FieldElement& a) {
    const auto spec = a.spec();
    if (spec.m() == 1) return std::to_string(a.index());
    std::string s = "{";
    const auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
    }
    return s + "}";
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << to_string(a); }

}  // namespace fqr
