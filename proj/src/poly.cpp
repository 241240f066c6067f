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

#include "fqreduce/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fqreduce/errors.hpp"

namespace fqr {

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const noexcept {
    const auto da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return std::lexicographical_compare(b.exponents.begin(), b.exponents.end(), a.exponents.begin(), a.exponents.end());
}

MultiPoly MultiPoly::constant(FieldSpec spec, std::size_t nvars, const FieldElement& c) {
    MultiPoly f(spec, nvars);
    f.add_term(Monomial{std::vector<std::uint32_t>(nvars, 0)}, c);
    return f;
}

MultiPoly MultiPoly::variable(FieldSpec spec, std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw UsageError("variable index out of range");
    Monomial mon{std::vector<std::uint32_t>(nvars, 0)};
    mon.exponents[i] = 1;
    MultiPoly f(spec, nvars);
    f.add_term(mon, spec.one());
    return f;
}

void MultiPoly::add_term(const Monomial& mon, const FieldElement& c) {
    if (mon.exponents.size() != nvars_) throw UsageError("monomial has the wrong number of variables");
    if (!(c.spec() == spec_)) throw UsageError("coefficient from a different field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mon, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
    if (!(spec_ == other.spec_)) throw UsageError("polynomials over different fields");
    if (nvars_ != other.nvars_) throw UsageError("polynomials in different numbers of variables");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [mon, c] : other.terms_) add_term(mon, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    check_compatible(other);
    for (const auto& [mon, c] : other.terms_) add_term(mon, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const FieldElement& c) {
    if (!(c.spec() == spec_)) throw UsageError("scalar from a different field");
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [mon, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.spec_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial mon = ma;
            for (std::size_t i = 0; i < mon.exponents.size(); ++i) mon.exponents[i] += mb.exponents[i];
            r.add_term(mon, ca * cb);
        }
    }
    return r;
}

namespace {

class PolyParser {
   public:
    PolyParser(std::string_view text, std::span<const std::string> vars, const FieldSpec& spec)
        : text_(text), vars_(vars), spec_(spec) {}

    MultiPoly parse() {
        MultiPoly result(spec_, vars_.size());
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        while (true) {
            MultiPoly t = term();
            if (negate) result -= t;
            else result += t;
            skip_ws();
            if (pos_ == text_.size()) break;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
                continue;
            }
            fail("expected '+', '-' or '*'");
        }
        return result;
    }

   private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

    MultiPoly term() {
        skip_ws();
        FieldElement coeff = spec_.one();
        Monomial mon{std::vector<std::uint32_t>(vars_.size(), 0)};
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '{') {
            coeff = coefficient();
        } else {
            factor(mon);
        }
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
            factor(mon);
        }
        MultiPoly f(spec_, vars_.size());
        f.add_term(mon, coeff);
        return f;
    }

    FieldElement coefficient() {
        const std::size_t start = pos_;
        if (peek() == '{') {
            while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
            if (pos_ == text_.size()) fail("unterminated coefficient literal");
            ++pos_;
        } else {
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        try {
            return parse_element(spec_, text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError("invalid coefficient: " + e.message(), 0, start + e.column());
        }
    }

    void factor(Monomial& mon) {
        const std::size_t start = pos_;
        const char c = peek();
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            fail(pos_ == text_.size() ? "unexpected end of input, expected a variable" : "expected a variable");
        }
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw ParseError("unknown variable '" + std::string(name) + "'", 0, start + 1);
        std::uint64_t exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer exponent");
            const std::size_t epos = pos_;
            exponent = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                exponent = exponent * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                if (exponent > 1'000'000) throw ParseError("exponent too large", 0, epos + 1);
                ++pos_;
            }
            if (exponent == 0) throw ParseError("exponent must be positive", 0, epos + 1);
        }
        mon.exponents[static_cast<std::size_t>(it - vars_.begin())] += static_cast<std::uint32_t>(exponent);
    }

    std::string_view text_;
    std::span<const std::string> vars_;
    const FieldSpec& spec_;
    std::size_t pos_ = 0;
};

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::span<const std::string> vars, const FieldSpec& spec) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (!valid_identifier(vars[i])) throw UsageError("invalid variable name '" + vars[i] + "'");
        if (std::find(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(i), vars[i]) != vars.begin() + static_cast<std::ptrdiff_t>(i)) {
            throw UsageError("duplicate variable name '" + vars[i] + "'");
        }
    }
    return PolyParser(text, vars, spec).parse();
}

std::string to_string(const MultiPoly& f, std::span<const std::string> vars) {
    if (vars.size() != f.nvars()) throw UsageError("variable name count does not match the polynomial");
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [mon, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        std::string term;
        if (!c.is_one() || mon.degree() == 0) term = to_string(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto e = mon.exponents[i];
            if (e == 0) continue;
            if (!term.empty()) term += "*";
            term += vars[i];
            if (e > 1) term += "^" + std::to_string(e);
        }
        out += term;
    }
    return out;
}

FieldElement evaluate(const MultiPoly& f, std::span<const FieldElement> point) {
    if (point.size() != f.nvars()) throw UsageError("point dimension does not match the number of variables");
    FieldElement sum = f.spec().zero();
    for (const auto& [mon, c] : f.terms()) {
        FieldElement t = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            if (mon.exponents[i] != 0) t *= point[i].pow(mon.exponents[i]);
        }
        sum += t;
    }
    return sum;
}

Degree total_degree(const MultiPoly& f) {
    if (f.is_zero()) return kNoDegree;
    // the map is ordered by descending degree
    return f.terms().begin()->first.degree();
}

bool is_homogeneous(const MultiPoly& f, std::uint64_t d) {
    return std::all_of(f.terms().begin(), f.terms().end(), [d](const auto& t) { return t.first.degree() == d; });
}

bool is_homogeneous(const MultiPoly& f) {
    if (f.is_zero()) return true;
    return is_homogeneous(f, *total_degree(f));
}

MultiPoly linear_combination(std::span<const FieldElement> coeffs, std::span<const MultiPoly> fs) {
    if (coeffs.size() != fs.size()) throw UsageError("coefficient count does not match polynomial count");
    if (fs.empty()) throw UsageError("linear combination of no polynomials");
    MultiPoly result(fs.front().spec(), fs.front().nvars());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (!(fs[i].spec() == result.spec()) || fs[i].nvars() != result.nvars()) {
            throw UsageError("linear combination of incompatible polynomials");
        }
        if (!(coeffs[i].spec() == result.spec())) throw UsageError("scalar from a different field");
        if (!coeffs[i].is_zero()) result += coeffs[i] * fs[i];
    }
    return result;
}

SystemTable value_table(std::span<const MultiPoly> fs, std::span<const std::vector<FieldElement>> points,
                        std::vector<std::string> labels) {
    if (labels.size() != points.size()) throw UsageError("label count does not match point count");
    if (fs.empty() && points.empty()) throw UsageError("cannot infer the field of an empty table");
    const FieldSpec spec = fs.empty() ? points.front().at(0).spec() : fs.front().spec();
    std::vector<Row> rows;
    rows.reserve(fs.size());
    for (const auto& f : fs) {
        if (!(f.spec() == spec)) throw UsageError("polynomials over different fields");
        Row r;
        r.reserve(points.size());
        for (const auto& x : points) r.push_back(evaluate(f, x));
        rows.push_back(std::move(r));
    }
    return SystemTable(spec, std::move(labels), std::move(rows));
}

SystemTable value_table(std::span<const MultiPoly> fs, std::span<const AffinePoint> points) {
    std::vector<std::vector<FieldElement>> coords;
    std::vector<std::string> labels;
    for (const auto& x : points) {
        coords.push_back(x.coords);
        labels.push_back(to_string(x));
    }
    return value_table(fs, coords, std::move(labels));
}

SystemTable value_table(std::span<const MultiPoly> fs, std::span<const ProjectivePoint> points) {
    std::vector<std::vector<FieldElement>> coords;
    std::vector<std::string> labels;
    for (const auto& x : points) {
        coords.push_back(x.coords());
        labels.push_back(to_string(x));
    }
    return value_table(fs, coords, std::move(labels));
}

}  // namespace fqr
