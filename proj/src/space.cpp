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

#include "fqreduce/space.hpp"

#include <limits>

#include "fqreduce/errors.hpp"

namespace fqr {

namespace {

std::uint64_t checked_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) throw ResourceLimit("count overflows 64 bits");
        r *= q;
    }
    return r;
}

// Advances `digits` as a big-endian base-q counter; false on wrap-around.
bool increment(std::vector<std::uint32_t>& digits, std::uint32_t q) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < q) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

ProjectivePoint canonicalize(std::span<const FieldElement> raw) {
    if (raw.empty()) throw UsageError("projective point needs at least one coordinate");
    std::size_t last = raw.size();
    for (std::size_t i = raw.size(); i-- > 0;) {
        if (!raw[i].is_zero()) {
            last = i;
            break;
        }
    }
    if (last == raw.size()) throw NotAProjectivePoint();
    const FieldElement scale = raw[last].inverse();
    std::vector<FieldElement> coords;
    coords.reserve(raw.size());
    for (const auto& c : raw) coords.push_back(c * scale);
    return ProjectivePoint(std::move(coords), last);
}

bool is_canonical(std::span<const FieldElement> raw) {
    for (std::size_t i = raw.size(); i-- > 0;) {
        if (!raw[i].is_zero()) return raw[i].is_one();
    }
    return false;
}

std::uint64_t affine_count(std::size_t n, std::uint64_t q) { return checked_pow(q, n); }

std::uint64_t projective_count(std::size_t n, std::uint64_t q) {
    if (q < 2) throw UsageError("field order must be at least 2");
    // sum_{i=0}^{n} q^i, which equals (q^(n+1)-1)/(q-1) without the overflow of q^(n+1)
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const std::uint64_t term = checked_pow(q, i);
        if (total > std::numeric_limits<std::uint64_t>::max() - term) throw ResourceLimit("count overflows 64 bits");
        total += term;
    }
    return total;
}

std::uint64_t projective_bound(std::size_t n, std::uint64_t q) { return projective_count(n, q) - 1; }

std::vector<AffinePoint> enum_affine(std::size_t n, const FieldSpec& spec, std::uint64_t cap) {
    if (n == 0) throw UsageError("affine dimension must be at least 1");
    const std::uint64_t total = affine_count(n, spec.q());
    if (total > cap) throw ResourceLimit("A^" + std::to_string(n) + " has " + std::to_string(total) + " points, over the cap of " + std::to_string(cap));

    std::vector<AffinePoint> out;
    out.reserve(total);
    std::vector<std::uint32_t> digits(n, 0);
    do {
        AffinePoint x;
        x.coords.reserve(n);
        for (auto d : digits) x.coords.push_back(spec.element(d));
        out.push_back(std::move(x));
    } while (increment(digits, spec.q()));
    return out;
}

std::vector<ProjectivePoint> enum_projective(std::size_t n, const FieldSpec& spec, std::uint64_t cap) {
    if (n == 0) throw UsageError("projective dimension must be at least 1");
    const std::uint64_t total = projective_count(n, spec.q());
    if (total > cap) throw ResourceLimit("P^" + std::to_string(n) + " has " + std::to_string(total) + " points, over the cap of " + std::to_string(cap));

    std::vector<ProjectivePoint> out;
    out.reserve(total);
    for (std::size_t last = 0; last <= n; ++last) {
        std::vector<std::uint32_t> digits(last, 0);
        do {
            std::vector<FieldElement> raw;
            raw.reserve(n + 1);
            for (auto d : digits) raw.push_back(spec.element(d));
            raw.push_back(spec.one());
            while (raw.size() < n + 1) raw.push_back(spec.zero());
            out.push_back(canonicalize(raw));
        } while (increment(digits, spec.q()));
    }
    return out;
}

std::string to_string(const AffinePoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) s += ",";
        s += to_string(x.coords[i]);
    }
    return s + ")";
}

std::string to_string(const ProjectivePoint& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (i) s += ":";
        s += to_string(x.coords()[i]);
    }
    return s + "]";
}

}  // namespace fqr
