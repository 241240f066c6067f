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

#ifndef FQREDUCE_REDUCER_HPP
#define FQREDUCE_REDUCER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fqreduce/gf.hpp"
#include "fqreduce/kernel_bijection.hpp"
#include "fqreduce/poly.hpp"
#include "fqreduce/table.hpp"

namespace fqr {

/// What one m+1 -> m step did.
struct StepRecord {
    std::size_t m;                             // rows after the step
    std::vector<RrefMatrix> used_matrices;     // distinct M_s, in canonical order
    RrefMatrix chosen;                         // first matrix of M_m not in used_matrices
    std::uint64_t probe_count;                 // matrices visited, chosen one included
};

struct StepOutcome {
    StepRecord record;
    SystemTable table;
};

struct ReductionResult {
    Matrix coefficients;   // n x k scalar matrix C with reduced = C * original
    SystemTable reduced;
    std::vector<StepRecord> steps;
};

struct ReduceOptions {
    /// Refuse any step whose point count exceeds the cardinality bound.
    bool strict = false;
    /// Worker threads for collecting the used matrices. Results do not depend on it.
    unsigned jobs = 1;
};

/// |X| <= (q^(n+1)-q)/(q-1).
bool bound_check(std::uint64_t x_size, std::size_t n, const FieldSpec& spec);

/**
 * Replaces the m+1 rows of `table` by m scalar combinations with the same
 * zero set on X.
 *
 * Every nonzero value column s determines the matrix M_s of its projective
 * class; the first matrix of M_m (canonical order) that no column uses is
 * applied to the rows. Such a matrix sends no nonzero column to zero.
 *
 * Throws NoFreeMatrix when the value columns use all of M_m. `step` only
 * labels the error.
 */
StepOutcome step_reduce(const SystemTable& table, std::size_t step = 1, const ReduceOptions& options = {});

/// Reduces k rows to `target` rows by k - target single steps. For k <= target
/// the input is returned with C = I_k.
ReductionResult reduce_system(const SystemTable& table, std::size_t target, const ReduceOptions& options = {});

enum class SpaceMode { affine, projective };

struct PolyReduction {
    SystemTable original;           // input values on X
    ReductionResult table_result;
    std::vector<MultiPoly> reduced;  // C applied to the input polynomials
    std::vector<std::string> warnings;
};

/**
 * Reduces polynomials on all of A^n (affine mode, n variables) or on the
 * canonical representatives of P^n (projective mode, n+1 variables).
 *
 * Projective inputs that are not homogeneous are accepted with a warning;
 * their values are those at the canonical representatives. A projective
 * failure on a system with empty zero set is reported as EmptyProjectiveZeroSet.
 */
PolyReduction reduce_polynomials(std::span<const MultiPoly> fs, SpaceMode mode, std::size_t n_space,
                                 std::size_t target, const ReduceOptions& options = {});

}  // namespace fqr

#endif  // FQREDUCE_REDUCER_HPP
