#include "fixtures.hpp"

#include "boxtree/commands.hpp"
#include "boxtree/format.hpp"

#include <doctest.h>

using namespace boxtree;
using fixtures::family;
using fixtures::set;

namespace {

ExtendRequest ctx_a_request() {
    const auto a = fixtures::ctx_a();
    return ExtendRequest{a, family(a, {{"g1"}, {"g2"}, {"g1", "g2"}}), "g3", fixtures::attrs(a, {0})};
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("parse_row") {
    const auto a = fixtures::ctx_a();
    CHECK(parse_row(a, "10") == fixtures::attrs(a, {0}));
    CHECK(parse_row(a, "0,1") == fixtures::attrs(a, {1}));
    CHECK(parse_row(a, "1 1") == a.all_attributes());
    CHECK_THROWS_AS(parse_row(a, "101"), DimensionError);
    CHECK_THROWS_AS(parse_row(a, "1x"), ParseError);
}

TEST_CASE("format helpers") {
    const auto b = fixtures::ctx_b();
    CHECK(format_set(b, set(b, {"g1", "g3"})) == "{g1,g3}");
    CHECK(format_set(b, b.no_objects()) == "{}");
    CHECK(format_bits(set(b, {"g1", "g3"})) == "101");
    CHECK(parse_set(b, "{g1,g3}") == set(b, {"g1", "g3"}));
    CHECK(parse_set(b, "g2 g3") == set(b, {"g2", "g3"}));
    CHECK(parse_set(b, "{g2}\tlevel=1") == set(b, {"g2"}));
    CHECK_THROWS_AS(parse_set(b, "{g9}"), ParseError);
    const auto tree = family(b, {{"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}});
    CHECK(read_tree_text(b, tree_text(b, tree)) == tree);
    CHECK(read_tree_text(b, "# comment\n\n{g2}\n") == family(b, {{"g2"}}));
}

TEST_CASE("run_extend on the ctx_a tree") {
    const auto outcome = run_extend(ctx_a_request());
    const auto b = fixtures::ctx_b();
    CHECK(outcome.extension.tree.members == family(b, {{"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}}));
    CHECK_FALSE(outcome.repaired);
    CHECK(outcome.closure_budget == 4);
    CHECK(outcome.full_work.closures <= 4);
    CHECK(outcome.efficient());
    CHECK(outcome.full_work.lattice_builds == 0);
    CHECK(outcome.zbox_work.lattice_builds == 0);
    CHECK(outcome.full_work.extent_enumerations == 0);
    CHECK(outcome.zbox_work.extent_enumerations == 0);
    REQUIRE(outcome.listing);
    CHECK(outcome.listing->mode == ListaMode::Normative);
}

TEST_CASE("with_atom leaves the ctx_a result unchanged") {
    auto request = ctx_a_request();
    request.with_atom = true;
    CHECK(run_extend(request).extension.tree == run_extend(ctx_a_request()).extension.tree);
}

TEST_CASE("a singleton z box needs --allow-repair") {
    auto request = ctx_a_request();
    request.sub = fixtures::table({"g1", "g2"}, {"m1", "m2", "m3"}, {"X..", ".X."});
    request.row = AttributeSet(3, {2});
    request.tree = family(fixtures::ctx_a(), {{"g1"}, {"g2"}, {"g1", "g2"}});
    CHECK_THROWS_AS(run_extend(request), NonstandardProblemError);
    request.allow_repair = true;
    const auto outcome = run_extend(request);
    CHECK(outcome.repaired);
    CHECK(outcome.extension.tree.contains(ObjectSet(3, {2})));
}

TEST_CASE("faithful extend report") {
    auto request = ctx_a_request();
    request.mode = ListaMode::Faithful;
    const std::string expected =
        "# boxtree extend v1\n"
        "z g3\n"
        "tree {g2}\n"
        "tree {g1,g3}\n"
        "tree {g1,g2,g3}\n"
        "fate {g1} extends closure_with_z={g1,g3}\n"
        "fate {g2} survives zbox&closure={}\n"
        "fate {g1,g2} extends closure_with_z={g1,g2,g3}\n";
    const auto report = extend_report(run_extend(request), false);
    CHECK(report.rfind(expected, 0) == 0);
    CHECK(report.find("F[1] 00 {}\nF[2] 10 {g1}\n") != std::string::npos);
    CHECK(report.find("notice faithful listing differs from the fate rule on 2 row(s)\n") != std::string::npos);
    CHECK(report.find("box_extents_of_K 0\n") != std::string::npos);
}

TEST_CASE("bench instances") {
    const auto d = bench_instance(BenchFamily::Diagonal, 8, 1);
    CHECK(d.sub.object_count() == 8);
    CHECK(d.tree.size() == 9);
    const auto b = bench_instance(BenchFamily::Blocked, 16, 1);
    CHECK(b.sub.object_count() == 16);
    CHECK(b.sub.attribute_count() == 20);
    CHECK(b.row.count() == 1);
    CHECK(bench_instance(BenchFamily::Blocked, 16, 1).row == b.row);
}

TEST_CASE("run_bench is reproducible and linear on the diagonal family") {
    const auto report = run_bench(BenchFamily::Diagonal, {8, 16, 32}, 1);
    CHECK(bench_text(report, false) == bench_text(run_bench(BenchFamily::Diagonal, {8, 16, 32}, 1), false));
    CHECK(report.rows.size() == 3);
    for (const auto& row : report.rows) CHECK(row.efficient);
    CHECK(report.slope == doctest::Approx(1.0).epsilon(0.3));
    CHECK_THROWS_AS(run_bench(BenchFamily::Diagonal, {16, 8}, 1), ValidationError);
}

TEST_CASE("loglog_slope") {
    CHECK(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}) == doctest::Approx(2.0));
    CHECK(loglog_slope({2, 4}, {5, 5}) == doctest::Approx(0.0));
}

}
