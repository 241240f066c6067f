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

#include "fqreduce/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "fqreduce/errors.hpp"

namespace fqr {

std::vector<std::string> zero_set(const SystemTable& table) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < table.point_count(); ++j) {
        if (table.column_is_zero(j)) out.push_back(table.labels()[j]);
    }
    return out;
}

bool zero_sets_equal(const SystemTable& a, const SystemTable& b) {
    if (a.labels() != b.labels()) throw UsageError("zero sets compared over different point sets");
    return zero_set(a) == zero_set(b);
}

SystemTable build_sharpness_instance(std::size_t n, const FieldSpec& spec, std::uint64_t cap) {
    const auto points = enum_projective(n, spec, cap);
    std::vector<std::string> labels;
    labels.reserve(points.size());
    for (const auto& x : points) labels.push_back(to_string(x));
    std::vector<Row> rows(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        rows[i].reserve(points.size());
        for (const auto& x : points) rows[i].push_back(x.coords()[i]);
    }
    return SystemTable(spec, std::move(labels), std::move(rows));
}

namespace {

using CoordKey = std::vector<std::uint32_t>;

CoordKey key_of(std::span<const FieldElement> v) {
    CoordKey k;
    k.reserve(v.size());
    for (const auto& e : v) k.push_back(e.index());
    return k;
}

struct SweepContext {
    std::size_t n;
    FieldSpec spec;
    std::vector<Row> columns;               // f(x) for every x in X_n
    std::map<CoordKey, std::size_t> index;  // canonical coordinates -> column
    bool brute_force;
};

struct SweepResult {
    std::uint64_t checked = 0;
    bool certificates_valid = true;
    std::optional<std::uint64_t> first_bad;  // matrix id of the first counterexample
    std::optional<SharpnessCounterexample> counterexample;
};

bool annihilates(const Matrix& a, const Row& column) {
    const Row g = a.apply(column);
    return std::all_of(g.begin(), g.end(), [](const FieldElement& e) { return e.is_zero(); });
}

// Checks one matrix; returns false if A f has no common zero on X_n.
void check_one(const SweepContext& ctx, std::uint64_t id, const Matrix& a, SweepResult& out) {
    ++out.checked;

    const ProjectivePoint cert = canonicalize(right_kernel_vector(a));
    const auto it = ctx.index.find(key_of(cert.coords()));
    const bool cert_ok = it != ctx.index.end() && annihilates(a, ctx.columns[it->second]);
    if (!cert_ok) out.certificates_valid = false;

    bool has_zero = cert_ok;
    if (ctx.brute_force) {
        has_zero = std::any_of(ctx.columns.begin(), ctx.columns.end(), [&a](const Row& c) { return annihilates(a, c); });
    }
    if (!has_zero && !out.first_bad) {
        out.first_bad = id;
        out.counterexample = SharpnessCounterexample{a, cert.coords()};
    }
}

Matrix matrix_from_index(const SweepContext& ctx, std::uint64_t id) {
    const std::size_t rows = ctx.n, cols = ctx.n + 1;
    Matrix a(ctx.spec, rows, cols);
    // row-major, first entry most significant
    for (std::size_t e = rows * cols; e-- > 0;) {
        a.at(e / cols, e % cols) = ctx.spec.element(id % ctx.spec.q());
        id /= ctx.spec.q();
    }
    return a;
}

Matrix random_matrix(const SweepContext& ctx, std::uint64_t seed, std::uint64_t id) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(id), static_cast<std::uint32_t>(id >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint32_t> dist(0, ctx.spec.q() - 1);
    Matrix a(ctx.spec, ctx.n, ctx.n + 1);
    for (std::size_t r = 0; r < ctx.n; ++r) {
        for (std::size_t c = 0; c <= ctx.n; ++c) a.at(r, c) = ctx.spec.element(dist(rng));
    }
    return a;
}

}  // namespace

SharpnessReport check_sharpness(std::size_t n, const FieldSpec& spec, const SharpnessOptions& options) {
    if (n == 0) throw UsageError("sharpness check needs n >= 1");

    std::uint64_t total = options.limit;
    if (options.mode == SharpnessMode::exhaustive) {
        std::uint64_t count = 0;
        try {
            count = affine_count(n * (n + 1), spec.q());
        } catch (const ResourceLimit&) {
            count = std::numeric_limits<std::uint64_t>::max();
        }
        if (count > options.limit) {
            throw ResourceLimit("exhaustive sweep needs q^(n(n+1)) = " +
                                (count == std::numeric_limits<std::uint64_t>::max() ? std::string("> 2^64") : std::to_string(count)) +
                                " matrices, over the limit of " + std::to_string(options.limit));
        }
        total = count;
    }

    const SystemTable instance = build_sharpness_instance(n, spec);
    SweepContext ctx{n, spec, {}, {}, options.mode == SharpnessMode::exhaustive};
    for (std::size_t j = 0; j < instance.point_count(); ++j) {
        ctx.columns.push_back(instance.column(j));
        ctx.index.emplace(key_of(ctx.columns.back()), j);
    }

    SharpnessReport report;
    report.q = spec.q();
    report.n = n;
    report.mode = options.mode;
    report.x_size = instance.point_count();
    report.z_of_f_empty = zero_set(instance).empty();

    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<SweepResult> parts(jobs);
    auto sweep = [&](unsigned w) {
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        const std::uint64_t begin = std::min(total, w * chunk), end = std::min(total, begin + chunk);
        for (std::uint64_t id = begin; id < end; ++id) {
            const Matrix a = options.mode == SharpnessMode::exhaustive ? matrix_from_index(ctx, id)
                                                                       : random_matrix(ctx, options.seed, id);
            check_one(ctx, id, a, parts[w]);
        }
    };
    if (jobs == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> workers;
        for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(sweep, w);
        for (auto& t : workers) t.join();
    }

    report.certificates_valid = true;
    for (auto& part : parts) {
        report.matrices_checked += part.checked;
        report.certificates_valid = report.certificates_valid && part.certificates_valid;
        // parts cover increasing id ranges, so the first one found is the smallest id
        if (part.counterexample && !report.counterexample) report.counterexample = std::move(part.counterexample);
    }
    report.all_have_zero = !report.counterexample.has_value();
    return report;
}

std::string to_string(const SharpnessReport& report) {
    auto flag = [](bool b) { return b ? std::string("true") : std::string("false"); };
    std::string s;
    s += "q: " + std::to_string(report.q) + "\n";
    s += "n: " + std::to_string(report.n) + "\n";
    s += std::string("mode: ") + (report.mode == SharpnessMode::exhaustive ? "exhaustive" : "kernel-certified") + "\n";
    s += "x_size: " + std::to_string(report.x_size) + "\n";
    s += "z_of_f_empty: " + flag(report.z_of_f_empty) + "\n";
    s += "matrices_checked: " + std::to_string(report.matrices_checked) + "\n";
    s += "all_have_zero: " + flag(report.all_have_zero) + "\n";
    s += "certificates_valid: " + flag(report.certificates_valid) + "\n";
    if (report.counterexample) {
        std::string rows;
        const auto& a = report.counterexample->a;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r) rows += " ";
            rows += "[";
            for (std::size_t c = 0; c < a.cols(); ++c) {
                if (c) rows += ", ";
                rows += to_string(a.at(r, c));
            }
            rows += "]";
        }
        s += "counterexample: " + rows + "\n";
        std::string cert = "[";
        for (std::size_t i = 0; i < report.counterexample->certificate.size(); ++i) {
            if (i) cert += ":";
            cert += to_string(report.counterexample->certificate[i]);
        }
        s += "certificate: " + cert + "]\n";
    } else {
        s += "counterexample: none\n";
    }
    return s;
}

}  // namespace fqr
