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

#ifndef FQREDUCE_ORACLE_HPP
#define FQREDUCE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqreduce/gf.hpp"
#include "fqreduce/kernel_bijection.hpp"
#include "fqreduce/space.hpp"
#include "fqreduce/table.hpp"

namespace fqr {

/// Labels of the points where every row vanishes, in table order.
std::vector<std::string> zero_set(const SystemTable& table);

/// Throws UsageError unless both tables have identical label sequences.
bool zero_sets_equal(const SystemTable& a, const SystemTable& b);

/// The extremal instance: X_n is one canonical representative per point of
/// P^n(F_q), and row i is the i-th coordinate function. Its n+1 rows have no
/// common zero.
SystemTable build_sharpness_instance(std::size_t n, const FieldSpec& spec, std::uint64_t cap = kEnumerationCap);

enum class SharpnessMode { exhaustive, kernel_certified };

struct SharpnessCounterexample {
    Matrix a;
    Row certificate;  // canonical kernel point of a
};

struct SharpnessReport {
    std::uint32_t q = 0;
    std::size_t n = 0;
    SharpnessMode mode = SharpnessMode::exhaustive;
    std::uint64_t x_size = 0;
    bool z_of_f_empty = false;
    std::uint64_t matrices_checked = 0;
    bool all_have_zero = false;
    /// Every kernel certificate lay in X_n and annihilated A f.
    bool certificates_valid = false;
    std::optional<SharpnessCounterexample> counterexample;
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 1'000'000;

struct SharpnessOptions {
    SharpnessMode mode = SharpnessMode::exhaustive;
    /// Exhaustive: maximum number of matrices q^(n(n+1)) allowed.
    /// Kernel-certified: number of random matrices to sample.
    std::uint64_t limit = kDefaultExhaustiveLimit;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/**
 * Checks that no n scalar combinations of the coordinate functions on X_n
 * have an empty zero set.
 *
 * For each n x (n+1) matrix A the combined system A f is searched for a
 * common zero by brute force over X_n (exhaustive mode), and the point
 * canonicalize(right_kernel_vector(A)) is verified to be such a zero.
 * Kernel-certified mode samples `limit` random matrices and relies on the
 * certificate alone. Exhaustive mode throws ResourceLimit if q^(n(n+1))
 * exceeds `limit`.
 */
SharpnessReport check_sharpness(std::size_t n, const FieldSpec& spec, const SharpnessOptions& options = {});

/// Flat `key: value` block, one entry per line.
std::string to_string(const SharpnessReport& report);

}  // namespace fqr

#endif  // FQREDUCE_ORACLE_HPP
