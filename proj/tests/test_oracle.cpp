#include <string>
#include <vector>

#include "doctest.h"
#include "fqreduce/errors.hpp"
#include "fqreduce/oracle.hpp"
#include "oracles.hpp"

using namespace fqr;

namespace {

SystemTable table_of(const FieldSpec& f, std::vector<std::string> labels, std::vector<std::vector<std::uint32_t>> rows) {
    std::vector<Row> out;
    for (const auto& r : rows) {
        Row row;
        for (auto v : r) row.push_back(f.element(v));
        out.push_back(row);
    }
    return SystemTable(f, std::move(labels), out);
}

}  // namespace

TEST_CASE("zero_set examples") {
    const FieldSpec f2(2);
    const std::vector<std::string> ab{"a", "b"};
    CHECK(zero_set(table_of(f2, ab, {{0, 0}})) == ab);
    CHECK(zero_set(table_of(f2, ab, {{1, 1}})).empty());
    CHECK(zero_set(table_of(f2, ab, {{0, 1}, {1, 0}})).empty());
    CHECK(zero_set(table_of(f2, ab, {{0, 1}, {0, 0}})) == std::vector<std::string>{"a"});
}

TEST_CASE("zero_sets_equal") {
    const FieldSpec f3(3);
    const std::vector<std::string> ab{"a", "b"};
    const auto t = table_of(f3, ab, {{0, 1}, {0, 2}});
    CHECK(zero_sets_equal(t, t));
    CHECK_FALSE(zero_sets_equal(table_of(f3, ab, {{0, 0}}), table_of(f3, ab, {{1, 2}})));
    CHECK(zero_sets_equal(t, table_of(f3, ab, {{0, 2}})));
    CHECK_THROWS_AS(zero_sets_equal(t, table_of(f3, {"b", "a"}, {{0, 1}})), UsageError);
}

TEST_CASE("sharpness instance") {
    const FieldSpec f2(2);
    const auto x1 = build_sharpness_instance(1, f2);
    CHECK(x1.labels() == std::vector<std::string>{"[1:0]", "[0:1]", "[1:1]"});
    CHECK(x1.rows() == table_of(f2, x1.labels(), {{1, 0, 1}, {0, 1, 1}}).rows());
    CHECK(build_sharpness_instance(2, FieldSpec(3)).point_count() == 13);
    for (const auto& f : {FieldSpec(2), FieldSpec(3), FieldSpec(2, 2), FieldSpec(5)}) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto inst = build_sharpness_instance(n, f);
            CHECK(zero_set(inst).empty());
            CHECK(inst.point_count() == projective_bound(n, f.q()) + 1);
        }
    }
    CHECK_THROWS_AS(build_sharpness_instance(3, FieldSpec(5), 100), ResourceLimit);
}

TEST_CASE("exhaustive sharpness") {
    struct Case {
        std::uint32_t p;
        std::size_t n;
        std::uint64_t count;
    };
    for (const auto& c : {Case{2, 1, 4}, Case{3, 1, 9}, Case{2, 2, 64}, Case{3, 2, 729}}) {
        const auto r = check_sharpness(c.n, FieldSpec(c.p));
        CHECK(r.z_of_f_empty);
        CHECK(r.all_have_zero);
        CHECK(r.certificates_valid);
        CHECK(r.matrices_checked == c.count);
        CHECK_FALSE(r.counterexample.has_value());
    }
    SharpnessOptions parallel;
    parallel.jobs = 3;
    const auto r = check_sharpness(2, FieldSpec(3), parallel);
    CHECK(r.matrices_checked == 729);
    CHECK(r.all_have_zero);
}

TEST_CASE("sharpness limits and kernel mode") {
    SharpnessOptions small;
    small.limit = 100;
    CHECK_THROWS_AS(check_sharpness(2, FieldSpec(3), small), ResourceLimit);
    CHECK_THROWS_AS(check_sharpness(4, FieldSpec(5)), ResourceLimit);
    CHECK_THROWS_AS(check_sharpness(0, FieldSpec(2)), UsageError);

    SharpnessOptions kernel;
    kernel.mode = SharpnessMode::kernel_certified;
    kernel.limit = 300;
    kernel.seed = 9;
    const auto r = check_sharpness(3, FieldSpec(5), kernel);
    CHECK(r.matrices_checked == 300);
    CHECK(r.all_have_zero);
    CHECK(r.certificates_valid);
    kernel.jobs = 4;
    CHECK(to_string(check_sharpness(3, FieldSpec(5), kernel)) == to_string(r));
}

TEST_CASE("report format") {
    const auto r = check_sharpness(1, FieldSpec(2));
    CHECK(to_string(r) ==
          "q: 2\n"
          "n: 1\n"
          "mode: exhaustive\n"
          "x_size: 3\n"
          "z_of_f_empty: true\n"
          "matrices_checked: 4\n"
          "all_have_zero: true\n"
          "certificates_valid: true\n"
          "counterexample: none\n");
}
