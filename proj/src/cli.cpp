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

#include "fqreduce/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fqreduce/errors.hpp"
#include "fqreduce/kernel_bijection.hpp"
#include "fqreduce/oracle.hpp"
#include "fqreduce/reducer.hpp"
#include "fqreduce/space.hpp"

namespace fqr::cli {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;  // comment stripped
};

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

// Splits the rest of a line into whitespace-separated words with their 0-based offsets.
std::vector<std::pair<std::string, std::size_t>> words(std::string_view s, std::size_t from) {
    std::vector<std::pair<std::string, std::size_t>> out;
    std::size_t i = skip_space(s, from);
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        out.emplace_back(std::string(s.substr(i, j - i)), i);
        i = skip_space(s, j);
    }
    return out;
}

// Rethrows a column-only parse error at its position in the file.
[[noreturn]] void relocate(const ParseError& e, const Line& line, std::size_t offset) {
    throw ParseError(e.message(), line.number, offset + e.column());
}

std::string join_labels(const std::vector<std::string>& labels) {
    if (labels.empty()) return "(none)";
    std::string s;
    for (const auto& l : labels) {
        if (!s.empty()) s += " ";
        s += l;
    }
    return s;
}

std::string matrix_inline(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += " ";
        s += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += to_string(m.at(r, c));
        }
        s += "]";
    }
    return s;
}

std::string degree_string(const Degree& d) { return d ? std::to_string(*d) : std::string("none"); }

Degree max_degree(const std::vector<MultiPoly>& fs) {
    Degree best = kNoDegree;
    for (const auto& f : fs) {
        const auto d = total_degree(f);
        if (d && (!best || *d > *best)) best = d;
    }
    return best;
}

const char* mode_name(FileMode m) {
    switch (m) {
        case FileMode::affine: return "affine";
        case FileMode::projective: return "projective";
        case FileMode::table: return "table";
    }
    return "";
}

}  // namespace

SystemFile parse_system_file(std::string_view content) {
    std::vector<Line> lines;
    std::size_t number = 0, start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        if (end == std::string_view::npos) end = content.size();
        ++number;
        std::string_view text = content.substr(start, end - start);
        if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
        if (skip_space(text, 0) < text.size()) lines.push_back({number, text});
        start = end + 1;
    }

    auto keyword = [](const Line& l, std::size_t& rest) {
        const std::size_t b = skip_space(l.text, 0);
        std::size_t e = b;
        while (e < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[e]))) ++e;
        rest = e;
        return std::string(l.text.substr(b, e - b));
    };
    auto column_of = [](const Line& l) { return skip_space(l.text, 0) + 1; };

    if (lines.empty()) throw ParseError("empty system file", 1, 1);

    std::size_t rest = 0;
    if (keyword(lines[0], rest) != "field") throw ParseError("expected 'field <literal>'", lines[0].number, column_of(lines[0]));
    const std::size_t field_at = skip_space(lines[0].text, rest);
    std::optional<FieldSpec> field;
    try {
        field = parse_field(lines[0].text.substr(field_at));
    } catch (const ParseError& e) {
        relocate(e, lines[0], field_at);
    } catch (const Error& e) {
        throw ParseError(e.what(), lines[0].number, field_at + 1);
    }

    if (lines.size() < 2 || keyword(lines[1], rest) != "mode") {
        const Line& l = lines.size() < 2 ? lines[0] : lines[1];
        throw ParseError("expected 'mode affine|projective|table'", l.number, lines.size() < 2 ? l.text.size() + 1 : column_of(l));
    }
    const auto mode_words = words(lines[1].text, rest);
    if (mode_words.size() != 1) throw ParseError("expected exactly one mode", lines[1].number, rest + 1);
    FileMode mode;
    if (mode_words[0].first == "affine") mode = FileMode::affine;
    else if (mode_words[0].first == "projective") mode = FileMode::projective;
    else if (mode_words[0].first == "table") mode = FileMode::table;
    else throw ParseError("unknown mode '" + mode_words[0].first + "'", lines[1].number, mode_words[0].second + 1);

    SystemFile file{*field, mode, {}, {}, {}, {}, {}};
    const bool table = mode == FileMode::table;
    const std::string header = table ? "points" : "vars";
    const std::string item = table ? "row" : "poly";

    if (lines.size() < 3 || keyword(lines[2], rest) != header) {
        const Line& l = lines.size() < 3 ? lines[1] : lines[2];
        throw ParseError("expected '" + header + " ...'", l.number, lines.size() < 3 ? l.text.size() + 1 : column_of(l));
    }
    const auto names = words(lines[2].text, rest);
    if (names.empty()) throw ParseError("'" + header + "' needs at least one name", lines[2].number, rest + 1);
    for (const auto& [name, at] : names) {
        if (table) {
            if (std::find(file.points.begin(), file.points.end(), name) != file.points.end()) {
                throw ParseError("duplicate point label '" + name + "'", lines[2].number, at + 1);
            }
            file.points.push_back(name);
        } else {
            const bool ok = (std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') &&
                            std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
            if (!ok) throw ParseError("invalid variable name '" + name + "'", lines[2].number, at + 1);
            if (std::find(file.vars.begin(), file.vars.end(), name) != file.vars.end()) {
                throw ParseError("duplicate variable '" + name + "'", lines[2].number, at + 1);
            }
            file.vars.push_back(name);
        }
    }
    if (mode == FileMode::projective && file.vars.size() < 2) {
        throw ParseError("projective mode needs at least two variables", lines[2].number, rest + 1);
    }

    for (std::size_t li = 3; li < lines.size(); ++li) {
        const Line& l = lines[li];
        const std::string kw = keyword(l, rest);
        if (kw != item) throw ParseError("expected '" + item + " ...'", l.number, column_of(l));
        if (table) {
            const auto vals = words(l.text, rest);
            if (vals.size() != file.points.size()) {
                throw ParseError("row has " + std::to_string(vals.size()) + " values for " + std::to_string(file.points.size()) + " points",
                                 l.number, rest + 1);
            }
            Row r;
            for (const auto& [v, at] : vals) {
                try {
                    r.push_back(parse_element(file.field, v));
                } catch (const ParseError& e) {
                    relocate(e, l, at);
                }
            }
            file.rows.push_back(std::move(r));
        } else {
            const std::size_t at = skip_space(l.text, rest);
            const std::string_view expr = l.text.substr(at);
            if (expr.empty()) throw ParseError("empty polynomial", l.number, at + 1);
            try {
                file.polys.push_back(parse_poly(expr, file.vars, file.field));
            } catch (const ParseError& e) {
                relocate(e, l, at);
            }
            file.poly_sources.emplace_back(expr);
        }
    }
    if (file.polys.empty() && file.rows.empty()) {
        throw ParseError("no '" + item + "' lines", lines.back().number + 1, 1);
    }
    return file;
}

int run_reduce(std::string_view content, const ReduceFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        const SystemFile file = parse_system_file(content);
        const ReduceOptions options{flags.strict, std::max(1u, flags.jobs)};

        std::ostringstream doc;
        doc << "field: " << file.field.literal() << "\n";
        doc << "mode: " << mode_name(file.mode) << "\n";

        std::optional<SystemTable> original;
        std::optional<ReductionResult> result;
        std::vector<MultiPoly> reduced_polys;
        std::vector<std::string> warnings;
        std::size_t target = 0;

        if (file.mode == FileMode::table) {
            original.emplace(file.field, file.points, file.rows);
            if (flags.target) {
                target = *flags.target;
            } else {
                // smallest row count the cardinality bound guarantees
                target = 1;
                while (!bound_check(original->point_count(), target, file.field)) ++target;
            }
            doc << "points: " << original->point_count() << "\n";
            doc << "input_rows: " << original->row_count() << "\n";
            doc << "target: " << target << "\n";
            result.emplace(reduce_system(*original, target, options));
        } else {
            const SpaceMode mode = file.mode == FileMode::affine ? SpaceMode::affine : SpaceMode::projective;
            const std::size_t n_space = file.mode == FileMode::affine ? file.vars.size() : file.vars.size() - 1;
            target = flags.target.value_or(n_space);
            doc << "vars: " << join_labels(file.vars) << "\n";
            doc << "input_rows: " << file.polys.size() << "\n";
            doc << "target: " << target << "\n";
            auto reduction = reduce_polynomials(file.polys, mode, n_space, target, options);
            original.emplace(std::move(reduction.original));
            result.emplace(std::move(reduction.table_result));
            reduced_polys = std::move(reduction.reduced);
            warnings = std::move(reduction.warnings);
            doc << "points: " << original->point_count() << "\n";
        }

        const auto& spec = file.field;
        doc << "bound: " << projective_bound(target, spec.q()) << " ("
            << (bound_check(original->point_count(), target, spec) ? "within" : "exceeded") << ")\n";
        for (const auto& w : warnings) doc << "warning: " << w << "\n";

        doc << "reduced:\n";
        if (file.mode == FileMode::table) {
            for (const auto& r : result->reduced.rows()) {
                doc << "row";
                for (const auto& v : r) doc << " " << to_string(v);
                doc << "\n";
            }
        } else {
            for (const auto& g : reduced_polys) doc << "poly " << to_string(g, file.vars) << "\n";
        }
        doc << "coefficients:\n" << to_string(result->coefficients);
        doc << "steps: " << result->steps.size() << "\n";
        for (std::size_t s = 0; s < result->steps.size(); ++s) {
            const auto& st = result->steps[s];
            doc << "step " << s + 1 << ": rows " << st.m + 1 << " -> " << st.m << ", used " << st.used_matrices.size()
                << ", probes " << st.probe_count << ", chosen " << matrix_inline(st.chosen.dense()) << "\n";
        }

        if (flags.verify) {
            // span membership: reduced = C * original, recomputed entrywise
            const Matrix& c = result->coefficients;
            bool span_ok = c.cols() == original->row_count() && c.rows() == result->reduced.row_count();
            for (std::size_t j = 0; span_ok && j < original->point_count(); ++j) {
                span_ok = c.apply(original->column(j)) == result->reduced.column(j);
            }
            const bool zero_ok = zero_sets_equal(*original, result->reduced);
            bool poly_ok = true, degree_ok = true;
            if (file.mode != FileMode::table) {
                // re-evaluate the output polynomials independently of the reducer's table
                const std::size_t n_space = file.mode == FileMode::affine ? file.vars.size() : file.vars.size() - 1;
                const SystemTable lifted =
                    file.mode == FileMode::affine ? value_table(reduced_polys, enum_affine(n_space, spec))
                                                  : value_table(reduced_polys, enum_projective(n_space, spec));
                poly_ok = lifted == result->reduced;
                const Degree in = max_degree(file.polys), outd = max_degree(reduced_polys);
                degree_ok = !outd || (in && *outd <= *in);
                doc << "degree: input " << degree_string(in) << ", output " << degree_string(outd) << "\n";
            }
            const auto zeros = zero_set(*original);
            doc << "zero_set_size: " << zeros.size() << "\n";
            doc << "zero_set: " << join_labels(zeros) << "\n";
            const bool ok = span_ok && zero_ok && poly_ok && degree_ok;
            doc << "verify: " << (ok ? "ok" : "FAILED") << " (span " << (span_ok ? "ok" : "bad") << ", zero set "
                << (zero_ok ? "ok" : "bad");
            if (file.mode != FileMode::table) {
                doc << ", polynomials " << (poly_ok ? "ok" : "bad") << ", degree " << (degree_ok ? "ok" : "bad");
            }
            doc << ")\n";
            out << doc.str();
            if (!ok) {
                err << "error: verification failed\n";
                return kVerificationFailure;
            }
            return kOk;
        }
        out << doc.str();
        return kOk;
    } catch (const ParseError& e) {
        err << "error: parse error at " << e.what() << "\n";
        return kParseError;
    } catch (const ReductionFailure& e) {
        err << "error: reduction failed at " << e.what() << "\n";
        return kNoFreeMatrix;
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const ResourceLimit& e) {
        err << "error: resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

int cmd_reduce(const std::string& path, const ReduceFlags& flags, std::ostream& out, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot read '" << path << "'\n";
        return kParseError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_reduce(buf.str(), flags, out, err);
}

int cmd_witness(std::string_view field, std::size_t n, const WitnessFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        const FieldSpec spec = parse_field(field);
        SharpnessOptions options;
        options.mode = flags.exhaustive ? SharpnessMode::exhaustive : SharpnessMode::kernel_certified;
        options.limit = flags.limit.value_or(flags.exhaustive ? kDefaultExhaustiveLimit : 1000);
        options.seed = flags.seed;
        options.jobs = std::max(1u, flags.jobs);
        const SharpnessReport report = check_sharpness(n, spec, options);
        out << to_string(report);
        if (report.z_of_f_empty && report.all_have_zero && report.certificates_valid) return kOk;
        err << "error: sharpness check failed\n";
        return kVerificationFailure;
    } catch (const ParseError& e) {
        err << "error: invalid field literal: " << e.what() << "\n";
        return kParseError;
    } catch (const ResourceLimit& e) {
        err << "error: resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

int cmd_lemma(std::string_view field, std::size_t n, const LemmaFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        const FieldSpec spec = parse_field(field);
        const std::uint64_t formula = projective_count(n, spec.q());
        const auto points = enum_projective(n, spec);

        std::uint64_t enumerated = 0;
        bool matrix_round_trip = true, kernel_ok = true;
        std::vector<std::string> listing;
        const bool list = flags.list || formula <= 16;
        for (const auto& m : enumerate_rref(n, spec)) {
            ++enumerated;
            const ProjectivePoint x = point_for_matrix(m);
            if (!(matrix_for_point(x) == m)) matrix_round_trip = false;
            const Row zero = m.dense().apply(x.coords());
            if (!std::all_of(zero.begin(), zero.end(), [](const FieldElement& e) { return e.is_zero(); })) kernel_ok = false;
            if (list) listing.push_back(matrix_inline(m.dense()) + " <-> " + to_string(x));
        }
        bool point_round_trip = true;
        for (const auto& x : points) {
            if (!(point_for_matrix(matrix_for_point(x)) == x)) point_round_trip = false;
        }

        out << "field: " << spec.literal() << "\n";
        out << "n: " << n << "\n";
        out << "count: " << enumerated << "\n";
        out << "count_formula: " << formula << "\n";
        out << "projective_points: " << points.size() << "\n";
        out << "matrix_to_point_to_matrix: " << (matrix_round_trip ? "ok" : "FAILED") << "\n";
        out << "point_to_matrix_to_point: " << (point_round_trip ? "ok" : "FAILED") << "\n";
        out << "kernel: " << (kernel_ok ? "ok" : "FAILED") << "\n";
        for (const auto& l : listing) out << l << "\n";

        const bool ok = matrix_round_trip && point_round_trip && kernel_ok && enumerated == formula && points.size() == formula;
        if (!ok) {
            err << "error: bijection self-test failed\n";
            return kVerificationFailure;
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "error: invalid field literal: " << e.what() << "\n";
        return kParseError;
    } catch (const ResourceLimit& e) {
        err << "error: resource limit: " << e.what() << "\n";
        return kResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

}  // namespace fqr::cli
