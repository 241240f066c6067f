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

#ifndef FQREDUCE_SPACE_HPP
#define FQREDUCE_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fqreduce/gf.hpp"

namespace fqr {

/// Default cap on the number of points an enumeration may produce.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 22;

struct AffinePoint {
    std::vector<FieldElement> coords;

    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/**
 * @brief A point of P^n(F_q) held by its canonical homogeneous coordinates.
 *
 * The canonical representative has its last nonzero coordinate equal to 1.
 * The only way to obtain one is canonicalize(), so every ProjectivePoint
 * satisfies the invariant.
 */
class ProjectivePoint {
   public:
    const std::vector<FieldElement>& coords() const noexcept { return coords_; }
    /// n, i.e. coords().size() - 1.
    std::size_t dimension() const noexcept { return coords_.size() - 1; }
    /// 0-based position of the last nonzero coordinate (which equals 1).
    std::size_t last_nonzero() const noexcept { return last_nonzero_; }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.coords_ == b.coords_; }

   private:
    ProjectivePoint(std::vector<FieldElement> coords, std::size_t last) : coords_(std::move(coords)), last_nonzero_(last) {}

    std::vector<FieldElement> coords_;
    std::size_t last_nonzero_;

    friend ProjectivePoint canonicalize(std::span<const FieldElement> raw);
};

/// Scales `raw` by the inverse of its last nonzero coordinate.
/// Throws NotAProjectivePoint for the zero vector, UsageError for an empty one.
ProjectivePoint canonicalize(std::span<const FieldElement> raw);

/// True iff `raw` is nonzero and its last nonzero coordinate is 1.
bool is_canonical(std::span<const FieldElement> raw);

/// q^n points, lexicographic by element index with the first coordinate most
/// significant. Throws ResourceLimit when q^n exceeds `cap`.
std::vector<AffinePoint> enum_affine(std::size_t n, const FieldSpec& spec, std::uint64_t cap = kEnumerationCap);

/// All (q^(n+1)-1)/(q-1) canonical points of P^n(F_q), ordered by position
/// of the last nonzero coordinate, then lexicographically by element index.
std::vector<ProjectivePoint> enum_projective(std::size_t n, const FieldSpec& spec,
                                             std::uint64_t cap = kEnumerationCap);

/// q^n; throws ResourceLimit on 64-bit overflow.
std::uint64_t affine_count(std::size_t n, std::uint64_t q);
/// (q^(n+1)-1)/(q-1); throws ResourceLimit on 64-bit overflow.
std::uint64_t projective_count(std::size_t n, std::uint64_t q);
/// (q^(n+1)-q)/(q-1): the largest |X| for which n scalar combinations always suffice.
std::uint64_t projective_bound(std::size_t n, std::uint64_t q);

std::string to_string(const AffinePoint& x);       // (a,b,...)
std::string to_string(const ProjectivePoint& x);   // [a:b:...]

}  // namespace fqr

#endif  // FQREDUCE_SPACE_HPP
