#include <sstream>
#include <string>

#include "doctest.h"
#include "fqreduce/cli.hpp"
#include "fqreduce/errors.hpp"

using namespace fqr;
using namespace fqr::cli;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run reduce(std::string_view content, ReduceFlags flags = {}) {
    std::ostringstream out, err;
    const int code = run_reduce(content, flags, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

const char* kAffine =
    "# x, x+1, 1\n"
    "field 2\n"
    "mode affine\n"
    "vars x\n"
    "poly x\n"
    "poly x + 1\n"
    "poly 1\n";

const char* kX1 =
    "field 2\n"
    "mode table\n"
    "points [1:0] [0:1] [1:1]\n"
    "row 1 0 1\n"
    "row 0 1 1\n";

}  // namespace

TEST_CASE("parse_system_file") {
    const auto sf = parse_system_file(kAffine);
    CHECK(sf.field.q() == 2);
    CHECK(sf.mode == FileMode::affine);
    CHECK(sf.vars == std::vector<std::string>{"x"});
    CHECK(sf.polys.size() == 3);
    CHECK(sf.poly_sources[1] == "x + 1");

    const auto t = parse_system_file(kX1);
    CHECK(t.mode == FileMode::table);
    CHECK(t.points.size() == 3);
    CHECK(t.rows.size() == 2);
}

TEST_CASE("parse errors report line and column") {
    auto where = [](const char* text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_system_file(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        return {0, 0};
    };
    CHECK(where("field 3\nmode affine\nvars x\npoly x^\n") == std::pair<std::size_t, std::size_t>{4, 8});
    CHECK(where("field 3\nmode affine\nvars x\npoly x + z\n").first == 4);
    CHECK(where("field 6\nmode affine\nvars x\npoly x\n").first == 1);
    CHECK(where("field 3\nmode circle\n").first == 2);
    CHECK(where("mode affine\n").first == 1);
    CHECK(where("field 3\nmode table\npoints a b\nrow 1\n").first == 4);
    CHECK(where("field 3\nmode table\npoints a a\nrow 1 2\n").first == 3);
    CHECK(where("field 3\nmode affine\nvars x\n").first != 0);
    CHECK(where("field 3\nmode affine\nvars x\nrow 1\n").first == 4);
}

TEST_CASE("reduce document and exit codes") {
    ReduceFlags verify;
    verify.verify = true;
    const auto r = reduce(kAffine, verify);
    CHECK(r.code == kOk);
    CHECK(r.err.empty());
    CHECK(contains(r.out, "reduced:\n"));
    CHECK(contains(r.out, "coefficients:\n"));
    CHECK(contains(r.out, "steps: 2\n"));
    CHECK(contains(r.out, "verify: ok"));

    const auto bad = reduce("field 3\nmode affine\nvars x\npoly x^\n");
    CHECK(bad.code == kParseError);
    CHECK(contains(bad.err, "line 4, column 8"));

    const auto fail = reduce(kX1, {.verify = false, .strict = false, .target = 1, .jobs = 1});
    CHECK(fail.code == kNoFreeMatrix);
    CHECK(contains(fail.err, "step 1"));

    ReduceFlags strict;
    strict.strict = true;
    strict.target = 1;
    const auto s = reduce(kX1, strict);
    CHECK(s.code == kNoFreeMatrix);
    CHECK(contains(s.err, "step 1"));

    const auto proj = reduce("field 2\nmode projective\nvars x y\npoly x\npoly y\n");
    CHECK(proj.code == kNoFreeMatrix);
}

TEST_CASE("reduce is deterministic and --verify only appends") {
    ReduceFlags plain, verify;
    verify.verify = true;
    const auto a = reduce(kAffine, verify), b = reduce(kAffine, verify);
    CHECK(a.out == b.out);
    const auto p = reduce(kAffine, plain);
    CHECK(a.out.substr(0, p.out.size()) == p.out);

    ReduceFlags jobs = verify;
    jobs.jobs = 4;
    CHECK(reduce(kAffine, jobs).out == a.out);
}

TEST_CASE("witness command") {
    std::ostringstream out, err;
    WitnessFlags exhaustive;
    exhaustive.exhaustive = true;
    CHECK(cmd_witness("2", 1, exhaustive, out, err) == kOk);
    CHECK(contains(out.str(), "matrices_checked: 4\n"));

    std::ostringstream out2, err2;
    CHECK(cmd_witness("3", 2, exhaustive, out2, err2) == kOk);
    CHECK(contains(out2.str(), "matrices_checked: 729\n"));

    std::ostringstream out3, err3;
    CHECK(cmd_witness("5", 3, exhaustive, out3, err3) == kResourceLimit);

    std::ostringstream out4, err4;
    WitnessFlags kernel;
    kernel.limit = 50;
    CHECK(cmd_witness("5", 3, kernel, out4, err4) == kOk);
    CHECK(contains(out4.str(), "mode: kernel-certified\n"));

    std::ostringstream out5, err5;
    CHECK(cmd_witness("6", 1, kernel, out5, err5) == kParseError);
}

TEST_CASE("lemma command") {
    std::ostringstream out, err;
    CHECK(cmd_lemma("3", 2, {}, out, err) == kOk);
    CHECK(contains(out.str(), "count: 13\n"));

    std::ostringstream out2, err2;
    CHECK(cmd_lemma("2", 1, {}, out2, err2) == kOk);
    CHECK(contains(out2.str(), "[0, 1] <-> [1:0]"));
    CHECK(contains(out2.str(), "[1, 1] <-> [1:1]"));

    std::ostringstream out3, err3;
    CHECK(cmd_lemma("5", 3, {}, out3, err3) == kOk);
    CHECK(contains(out3.str(), "count: 156\n"));
}
