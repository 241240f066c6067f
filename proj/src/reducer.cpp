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

#include "fqreduce/reducer.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <thread>
#include <unordered_set>

#include "fqreduce/errors.hpp"
#include "fqreduce/space.hpp"

namespace fqr {

namespace {

// Distinct M_s over columns [begin, end), keyed by canonical rank.
void collect_used(const SystemTable& table, std::size_t begin, std::size_t end, std::map<std::uint64_t, RrefMatrix>& out) {
    for (std::size_t j = begin; j < end; ++j) {
        if (table.column_is_zero(j)) continue;
        const Row s = table.column(j);
        RrefMatrix m = matrix_for_point(canonicalize(s));
        const auto rank = m.canonical_rank();
        out.try_emplace(rank, std::move(m));
    }
}

std::map<std::uint64_t, RrefMatrix> used_matrices(const SystemTable& table, unsigned jobs) {
    const std::size_t points = table.point_count();
    std::map<std::uint64_t, RrefMatrix> used;
    if (jobs <= 1 || points < 2 * std::size_t{jobs}) {
        collect_used(table, 0, points, used);
        return used;
    }
    std::vector<std::map<std::uint64_t, RrefMatrix>> parts(jobs);
    std::vector<std::thread> workers;
    const std::size_t chunk = (points + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t begin = std::min(points, w * chunk), end = std::min(points, begin + chunk);
        workers.emplace_back([&table, &parts, w, begin, end] { collect_used(table, begin, end, parts[w]); });
    }
    for (auto& t : workers) t.join();
    for (auto& p : parts) used.merge(p);
    return used;
}

std::vector<Row> apply_rows(const Matrix& m, const SystemTable& table) {
    const auto& spec = table.spec();
    std::vector<Row> out(m.rows(), Row(table.point_count(), spec.zero()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const auto& c = m.at(r, i);
            if (c.is_zero()) continue;
            const auto& src = table.rows()[i];
            for (std::size_t j = 0; j < src.size(); ++j) out[r][j] += c * src[j];
        }
    }
    return out;
}

}  // namespace

bool bound_check(std::uint64_t x_size, std::size_t n, const FieldSpec& spec) {
    return x_size <= projective_bound(n, spec.q());
}

StepOutcome step_reduce(const SystemTable& table, std::size_t step, const ReduceOptions& options) {
    if (table.row_count() < 2) throw UsageError("a reduction step needs at least two rows");
    const std::size_t m = table.row_count() - 1;
    const auto& spec = table.spec();

    if (options.strict && !bound_check(table.point_count(), m, spec)) {
        throw BoundViolation("|X| = " + std::to_string(table.point_count()) + " exceeds the bound " +
                                 std::to_string(projective_bound(m, spec.q())) + " for " + std::to_string(m) +
                                 " rows (strict mode)",
                             step);
    }

    auto used = used_matrices(table, options.jobs);
    std::unordered_set<std::uint64_t> used_ranks;
    used_ranks.reserve(used.size());
    for (const auto& entry : used) used_ranks.insert(entry.first);

    std::uint64_t probes = 0;
    for (const auto& candidate : enumerate_rref(m, spec)) {
        ++probes;
        if (used_ranks.contains(candidate.canonical_rank())) continue;

        const Matrix dense = candidate.dense();
        SystemTable out(spec, table.labels(), apply_rows(dense, table));
        std::vector<RrefMatrix> used_list;
        used_list.reserve(used.size());
        for (auto& [rank, mat] : used) used_list.push_back(std::move(mat));
        return StepOutcome{StepRecord{m, std::move(used_list), candidate, probes}, std::move(out)};
    }
    throw NoFreeMatrix("value columns occupy all " + std::to_string(projective_count(m, spec.q())) +
                           " matrices of M_" + std::to_string(m) + " (" + std::to_string(m + 1) + " -> " +
                           std::to_string(m) + " rows)",
                       step);
}

ReductionResult reduce_system(const SystemTable& table, std::size_t target, const ReduceOptions& options) {
    const std::size_t k = table.row_count();
    if (k == 0) throw UsageError("cannot reduce an empty system");
    if (target == 0) throw UsageError("target row count must be at least 1");

    Matrix c = Matrix::identity(table.spec(), k);
    if (k <= target) return ReductionResult{std::move(c), table, {}};

    SystemTable current = table;
    std::vector<StepRecord> steps;
    for (std::size_t step = 1; current.row_count() > target; ++step) {
        auto outcome = step_reduce(current, step, options);
        c = outcome.record.chosen.dense() * c;
        steps.push_back(std::move(outcome.record));
        current = std::move(outcome.table);
    }
    return ReductionResult{std::move(c), std::move(current), std::move(steps)};
}

PolyReduction reduce_polynomials(std::span<const MultiPoly> fs, SpaceMode mode, std::size_t n_space,
                                 std::size_t target, const ReduceOptions& options) {
    if (fs.empty()) throw UsageError("no polynomials to reduce");
    if (n_space == 0) throw UsageError("space dimension must be at least 1");
    const FieldSpec spec = fs.front().spec();
    const std::size_t nvars = mode == SpaceMode::affine ? n_space : n_space + 1;
    for (const auto& f : fs) {
        if (!(f.spec() == spec)) throw UsageError("polynomials over different fields");
        if (f.nvars() != nvars) {
            throw UsageError("expected polynomials in " + std::to_string(nvars) + " variables");
        }
    }

    std::vector<std::string> warnings;
    std::optional<SystemTable> original;
    if (mode == SpaceMode::affine) {
        original.emplace(value_table(fs, enum_affine(n_space, spec)));
    } else {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (!is_homogeneous(fs[i])) {
                warnings.push_back("polynomial " + std::to_string(i + 1) +
                                   " is not homogeneous; using its values at canonical representatives");
            }
        }
        original.emplace(value_table(fs, enum_projective(n_space, spec)));
    }

    std::optional<ReductionResult> result;
    try {
        result.emplace(reduce_system(*original, target, options));
    } catch (const NoFreeMatrix& e) {
        if (mode == SpaceMode::projective) {
            bool empty = true;
            for (std::size_t j = 0; j < original->point_count() && empty; ++j) empty = !original->column_is_zero(j);
            if (empty) {
                throw EmptyProjectiveZeroSet("projective zero set is empty, so the reduction guarantee does not apply; " +
                                                 e.detail(),
                                             e.step());
            }
        }
        throw;
    }

    std::vector<MultiPoly> reduced;
    const Matrix& c = result->coefficients;
    for (std::size_t r = 0; r < c.rows(); ++r) {
        const Row coeffs = c.row(r);
        reduced.push_back(linear_combination(coeffs, fs));
    }
    return PolyReduction{std::move(*original), std::move(*result), std::move(reduced), std::move(warnings)};
}

}  // namespace fqr
