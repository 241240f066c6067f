// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fqreduce/cli.hpp"
#include "fqreduce/errors.hpp"
#include "fqreduce/kernel_bijection.hpp"
#include "fqreduce/oracle.hpp"
#include "fqreduce/reducer.hpp"
#include "oracles.hpp"

using namespace fqr;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

const std::vector<FieldSpec>& grid_fields() {
    static const std::vector<FieldSpec> fs{FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(5)};
    return fs;
}

std::string where(const FieldSpec& f, std::size_t n) { return "q=" + std::to_string(f.q()) + " n=" + std::to_string(n); }

// Step-level bookkeeping shared by criteria 2 and 7.
struct StepStats {
    std::uint64_t steps = 0;
    std::uint64_t probe_violations = 0;
    std::uint64_t chosen_in_used = 0;
};

void record_steps(const ReductionResult& r, StepStats& stats) {
    for (const auto& s : r.steps) {
        ++stats.steps;
        if (s.probe_count > s.used_matrices.size() + 1) ++stats.probe_violations;
        for (const auto& m : s.used_matrices)
            if (m == s.chosen) ++stats.chosen_in_used;
    }
}

// Full certification of one reduced table against the brute-force oracles.
bool certified(const SystemTable& in, const ReductionResult& r, std::size_t target) {
    const std::size_t rows = std::min(in.row_count(), target);
    if (r.reduced.row_count() != rows || r.coefficients.rows() != rows || r.coefficients.cols() != in.row_count())
        return false;
    if (!(r.coefficients.spec() == in.spec())) return false;
    if (oracle::combine(r.coefficients, in.rows()) != r.reduced.rows()) return false;
    return oracle::zeros(r.reduced) == oracle::zeros(in) && zero_sets_equal(in, r.reduced);
}

Outcome ac1() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec f = q == 4 ? FieldSpec(2, 2) : FieldSpec(q);
        for (std::size_t n = 1; n <= 3; ++n) {
            std::uint64_t matrices = 0;
            for (const auto& m : enumerate_rref(n, f)) {
                ++matrices;
                if (!(matrix_for_point(point_for_matrix(m)) == m)) o.fail("M -> x -> M mismatch at " + where(f, n));
            }
            std::uint64_t points = 0;
            for (const auto& x : enum_projective(n, f)) {
                ++points;
                if (!(point_for_matrix(matrix_for_point(x)) == x)) o.fail("x -> M -> x mismatch at " + where(f, n));
            }
            std::uint64_t formula = 0, pw = 1;
            for (std::size_t i = 0; i <= n; ++i, pw *= q) formula += pw;
            if (matrices != formula || points != formula) o.fail("|M_n| != (q^(n+1)-1)/(q-1) at " + where(f, n));
        }
    }
    std::uint64_t c32 = 0, c53 = 0;
    for ([[maybe_unused]] const auto& m : enumerate_rref(2, FieldSpec(3))) ++c32;
    for ([[maybe_unused]] const auto& m : enumerate_rref(3, FieldSpec(5))) ++c53;
    if (c32 != 13 || c53 != 156) o.fail("expected 13 and 156 matrices");
    if (o.pass) o.detail = "round trips and counts exact on {2,3,4,5} x {1,2,3}";
    return o;
}

Outcome ac2_ac7(StepStats& stats) {
    Outcome o;
    std::uint64_t instances = 0;
    const FieldSpec f2(2);
    for (std::uint32_t bits = 0; bits < 16; ++bits) {
        const SystemTable t(f2, {"a", "b"},
                            {{f2.element(bits & 1), f2.element(bits >> 1 & 1)},
                             {f2.element(bits >> 2 & 1), f2.element(bits >> 3 & 1)}});
        try {
            const auto r = reduce_system(t, 1);
            record_steps(r, stats);
            if (!certified(t, r, 1)) o.fail("two-row system " + std::to_string(bits) + " not certified");
        } catch (const NoFreeMatrix&) {
            o.fail("NoFreeMatrix on two-row system " + std::to_string(bits));
        }
        ++instances;
    }

    std::mt19937_64 rng(20261016);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const FieldSpec f = q == 4 ? FieldSpec(2, 2) : FieldSpec(q);
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto bound = projective_bound(n, q);
            std::uniform_int_distribution<std::uint64_t> size(1, bound);
            for (std::size_t k = n + 1; k <= n + 3; ++k) {
                for (int trial = 0; trial < 1000; ++trial) {
                    // every fourth instance sits exactly at the bound
                    const auto points = trial % 4 == 0 ? bound : size(rng);
                    auto t = oracle::random_table(f, k, points, rng);
                    if (trial % 3 == 0) {
                        auto rows = t.rows();
                        for (auto& row : rows) row[0] = f.zero();
                        t = SystemTable(f, t.labels(), rows);
                    }
                    try {
                        const auto r = reduce_system(t, n);
                        record_steps(r, stats);
                        if (!certified(t, r, n)) o.fail("uncertified reduction at " + where(f, n));
                    } catch (const NoFreeMatrix& e) {
                        o.fail(std::string("NoFreeMatrix within the bound: ") + e.what());
                    }
                    ++instances;
                }
            }
        }
    }
    if (stats.chosen_in_used) o.fail("a chosen matrix was among the used ones");
    if (o.pass) o.detail = std::to_string(instances) + " instances certified, no NoFreeMatrix";
    return o;
}

MultiPoly random_poly(const FieldSpec& f, std::size_t nvars, std::uint32_t max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> coeff(0, f.q() - 1), deg(0, max_deg), count(1, 4);
    MultiPoly p(f, nvars);
    const auto terms = count(rng);
    for (std::uint32_t t = 0; t < terms; ++t) {
        Monomial mon{std::vector<std::uint32_t>(nvars, 0)};
        std::uint32_t budget = deg(rng);
        for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
            const auto e = v + 1 == nvars ? budget : std::uniform_int_distribution<std::uint32_t>(0, budget)(rng);
            mon.exponents[v] = e;
            budget -= e;
        }
        p.add_term(mon, f.element(coeff(rng)));
    }
    return p;
}

bool degrees_ok(std::span<const MultiPoly> in, std::span<const MultiPoly> out) {
    std::uint64_t max_in = 0;
    for (const auto& f : in) max_in = std::max(max_in, total_degree(f).value_or(0));
    for (const auto& g : out)
        if (total_degree(g).value_or(0) > max_in) return false;
    return true;
}

Outcome ac3() {
    Outcome o;
    std::uint64_t systems = 0;
    std::mt19937_64 rng(3);
    // polynomial-mode counterpart of the criterion 2 grid, X = A^n
    for (std::uint32_t q : {2u, 3u, 4u}) {
        const FieldSpec f = q == 4 ? FieldSpec(2, 2) : FieldSpec(q);
        for (std::size_t n = 1; n <= 2; ++n) {
            const auto points = enum_affine(n, f);
            for (std::size_t k = n + 1; k <= n + 3; ++k) {
                for (int trial = 0; trial < 1000; ++trial) {
                    std::vector<MultiPoly> fs;
                    for (std::size_t i = 0; i < k; ++i) fs.push_back(random_poly(f, n, 4, rng));
                    try {
                        const auto r = reduce_polynomials(fs, SpaceMode::affine, n, n);
                        if (!degrees_ok(fs, r.reduced)) o.fail("degree increased at " + where(f, n));
                        if (oracle::zeros(value_table(r.reduced, points)) != oracle::zeros(value_table(fs, points)))
                            o.fail("lifted polynomials changed the zero set at " + where(f, n));
                    } catch (const NoFreeMatrix& e) {
                        o.fail(std::string("NoFreeMatrix in polynomial mode: ") + e.what());
                    }
                    ++systems;
                }
            }
        }
    }
    // quadratic forms over F_5
    const FieldSpec f5(5);
    const auto plane = enum_affine(2, f5);
    std::uniform_int_distribution<std::uint32_t> c(0, 4), k(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<MultiPoly> fs;
        const auto count = k(rng);
        for (std::uint32_t i = 0; i < count; ++i) {
            MultiPoly p(f5, 2);
            p.add_term(Monomial{{2, 0}}, f5.element(c(rng)));
            p.add_term(Monomial{{1, 1}}, f5.element(c(rng)));
            p.add_term(Monomial{{0, 2}}, f5.element(c(rng)));
            fs.push_back(p);
        }
        const auto r = reduce_polynomials(fs, SpaceMode::affine, 2, 2);
        if (!degrees_ok(fs, r.reduced)) o.fail("quadratic system: degree increased");
        if (r.reduced.size() != std::min<std::size_t>(count, 2)) o.fail("quadratic system: wrong output count");
        if (oracle::zeros(value_table(r.reduced, plane)) != oracle::zeros(value_table(fs, plane)))
            o.fail("quadratic system: zero set changed");
        ++systems;
    }
    if (o.pass) o.detail = std::to_string(systems) + " polynomial systems, no degree increase";
    return o;
}

Outcome ac4() {
    Outcome o;
    struct Case {
        std::uint32_t q;
        std::size_t n;
        std::uint64_t count;
    };
    for (const auto& c : {Case{2, 1, 4}, Case{3, 1, 9}, Case{2, 2, 64}, Case{3, 2, 729}}) {
        const auto r = check_sharpness(c.n, FieldSpec(c.q));
        if (!r.z_of_f_empty || !r.all_have_zero || r.matrices_checked != c.count || !r.certificates_valid)
            o.fail("sharpness report wrong at " + where(FieldSpec(c.q), c.n));
    }
    if (o.pass) o.detail = "4, 9, 64, 729 matrices, every system has a common zero";
    return o;
}

SystemTable subset(const SystemTable& t, const std::vector<std::size_t>& keep) {
    std::vector<std::string> labels;
    std::vector<Row> rows(t.row_count());
    for (auto j : keep) {
        labels.push_back(t.labels()[j]);
        for (std::size_t i = 0; i < t.row_count(); ++i) rows[i].push_back(t.rows()[i][j]);
    }
    return SystemTable(t.spec(), labels, rows);
}

Outcome ac5() {
    Outcome o;
    std::uint64_t subsets = 0;
    for (const auto& f : grid_fields()) {
        for (std::size_t n = 1; n <= 2; ++n) {
            try {
                step_reduce(build_sharpness_instance(n, f));
                o.fail("X_n reduced at " + where(f, n));
            } catch (const NoFreeMatrix&) {
            }
        }
    }
    auto check_drop = [&](const SystemTable& inst, std::size_t n, std::size_t drop) {
        std::vector<std::size_t> keep;
        for (std::size_t j = 0; j < inst.point_count(); ++j)
            if (j != drop) keep.push_back(j);
        const auto t = subset(inst, keep);
        try {
            const auto r = reduce_system(t, n);
            if (!certified(t, r, n)) o.fail("subset not certified");
        } catch (const NoFreeMatrix&) {
            o.fail("NoFreeMatrix on a subset of size bound");
        }
        ++subsets;
    };
    // size-bound subsets of X_n omit exactly one point
    const auto x1 = build_sharpness_instance(1, FieldSpec(2));
    for (std::size_t drop = 0; drop < x1.point_count(); ++drop) check_drop(x1, 1, drop);
    const auto x2 = build_sharpness_instance(2, FieldSpec(3));
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, x2.point_count() - 1);
    for (int s = 0; s < 100; ++s) check_drop(x2, 2, pick(rng));
    if (o.pass) o.detail = "X_n fails as required; " + std::to_string(subsets) + " size-bound subsets certified";
    return o;
}

Outcome ac6() {
    Outcome o;
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec f = q == 4 ? FieldSpec(2, 2) : FieldSpec(q);
        for (std::size_t n = 1; n <= 3; ++n) {
            const std::uint64_t pn = enum_projective(n, f).size();
            const std::uint64_t an = enum_affine(n, f).size();
            if (projective_bound(n, q) != pn - 1) o.fail("bound != |P^n| - 1 at " + where(f, n));
            if (projective_bound(n, q) < an) o.fail("bound < q^n at " + where(f, n));
            if (oracle::count_projective_classes(f, n + 1) != pn) o.fail("class count mismatch at " + where(f, n));
        }
    }
    if (o.pass) o.detail = "identities hold with enumerated counts";
    return o;
}

Outcome ac7(const StepStats& stats) {
    Outcome o;
    if (stats.steps == 0) o.fail("no steps recorded");
    if (stats.probe_violations) o.fail(std::to_string(stats.probe_violations) + " steps exceeded |used| + 1 probes");
    if (o.pass) o.detail = std::to_string(stats.steps) + " steps within |used| + 1 probes";
    return o;
}

Outcome ac8() {
    Outcome o;
    cli::ReduceFlags flags;
    flags.verify = true;
    for (const char* name : {"f2_affine.sys", "f5_quadrics.sys", "gf4_projective.sys"}) {
        const std::string path = std::string(FQR_TEST_DATA) + "/" + name;
        std::ostringstream a, b, ea, eb;
        const int ca = cli::cmd_reduce(path, flags, a, ea);
        const int cb = cli::cmd_reduce(path, flags, b, eb);
        if (ca != cli::kOk || cb != cli::kOk) o.fail(std::string(name) + ": exit " + std::to_string(ca) + ": " + ea.str());
        if (a.str() != b.str() || ea.str() != eb.str()) o.fail(std::string(name) + ": output differs");
    }
    if (o.pass) o.detail = "byte-identical --verify output on 3 files";
    return o;
}

}  // namespace

int main() {
    int failures = 0;
    auto run = [&](int id, const char* title, const std::function<Outcome()>& body) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("AC%d %s  %-28s %6.2fs  %s\n", id, o.pass ? "PASS" : "FAIL", title, secs, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    };
    StepStats stats;
    run(1, "bijection", ac1);
    run(2, "reduction soundness", [&] { return ac2_ac7(stats); });
    run(3, "degree preservation", ac3);
    run(4, "sharpness", ac4);
    run(5, "boundary behavior", ac5);
    run(6, "cardinality identities", ac6);
    run(7, "probe efficiency", [&] { return ac7(stats); });
    run(8, "determinism", ac8);
    return failures == 0 ? 0 : 1;
}
