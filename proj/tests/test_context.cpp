#include "fixtures.hpp"

#include "boxtree/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace boxtree;
using fixtures::family;
using fixtures::set;

TEST_SUITE("context-core") {

TEST_CASE("Burmeister text for the 2x2 identity") {
    const auto loaded = load_context("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X\n", ContextFormat::Cxt);
    CHECK(loaded.context == fixtures::ctx_a());
    CHECK(loaded.diagnostics.empty());
}

TEST_CASE("CSV with a header row") {
    const auto loaded = load_context("name,m1,m2\ng1,1,0\ng2,0,1\ng3,1,0", ContextFormat::Csv);
    CHECK(loaded.context == fixtures::ctx_b());
}

TEST_CASE("CRLF line endings are accepted") {
    const auto cxt = load_context("B\r\n\r\n2\r\n2\r\n\r\ng1\r\ng2\r\nm1\r\nm2\r\nX.\r\n.X\r\n", ContextFormat::Cxt);
    CHECK(cxt.context == fixtures::ctx_a());
    const auto csv = load_context("name,m1,m2\r\ng1,1,0\r\ng2,0,1\r\ng3,1,0\r\n", ContextFormat::Csv);
    CHECK(csv.context == fixtures::ctx_b());
}

TEST_CASE("to_cxt round-trips") {
    for (const auto& ctx : {fixtures::ctx_a(), fixtures::ctx_b(), fixtures::ctx_c(), fixtures::ctx_d()})
        CHECK(load_context(to_cxt(ctx), ContextFormat::Cxt).context == ctx);
}

TEST_CASE("strict mode rejects an all-zero column, lenient mode reports it") {
    const std::string bytes = "name,m1,m2\ng1,1,0\ng2,1,0\n";
    CHECK_THROWS_AS(load_context(bytes, ContextFormat::Csv), ValidationError);
    const auto lenient = load_context(bytes, ContextFormat::Csv, false);
    CHECK(lenient.context.empty_columns() == std::vector<std::size_t>{1});
    CHECK(lenient.diagnostics.size() == 1);
}

TEST_CASE("strict mode rejects an all-zero row") {
    CHECK_THROWS_AS(load_context("name,m1\ng1,1\ng2,0\n", ContextFormat::Csv), ValidationError);
    CHECK_NOTHROW(load_context("name,m1\ng1,1\ng2,0\n", ContextFormat::Csv, false));
}

TEST_CASE("malformed input") {
    SUBCASE("duplicate object names") {
        CHECK_THROWS_AS(load_context("name,m1\ng1,1\ng1,1\n", ContextFormat::Csv), ParseError);
    }
    SUBCASE("duplicate attribute names") {
        CHECK_THROWS_AS(load_context("name,m1,m1\ng1,1,1\n", ContextFormat::Csv), ParseError);
    }
    SUBCASE("ragged csv row") {
        CHECK_THROWS_AS(load_context("name,m1,m2\ng1,1\n", ContextFormat::Csv), ParseError);
    }
    SUBCASE("bad csv cell") {
        CHECK_THROWS_AS(load_context("name,m1\ng1,2\n", ContextFormat::Csv), ParseError);
    }
    SUBCASE("ragged cxt row") {
        CHECK_THROWS_AS(load_context("B\n\n2\n2\n\ng1\ng2\nm1\nm2\nX\n.X\n", ContextFormat::Cxt), ParseError);
    }
    SUBCASE("missing B header") {
        CHECK_THROWS_AS(load_context("2\n2\n\ng1\ng2\nm1\nm2\nX.\n.X\n", ContextFormat::Cxt), ParseError);
    }
    SUBCASE("truncated cxt") {
        CHECK_THROWS_AS(load_context("B\n\n2\n2\n\ng1\ng2\nm1\n", ContextFormat::Cxt), ParseError);
    }
    SUBCASE("empty name") {
        CHECK_THROWS_AS(FormalContext({"g1", ""}, {"m1"}, {{true}, {true}}), ParseError);
    }
}

TEST_CASE("object_derive") {
    const auto a = fixtures::ctx_a();
    const auto b = fixtures::ctx_b();
    CHECK(object_derive(a, set(a, {"g1"})) == fixtures::attrs(a, {0}));
    CHECK(object_derive(a, a.no_objects()) == a.all_attributes());
    CHECK(object_derive(b, set(b, {"g1", "g3"})) == fixtures::attrs(b, {0}));
    CHECK_THROWS_AS(object_derive(a, ObjectSet(3)), DimensionError);
}

TEST_CASE("attribute_derive") {
    const auto a = fixtures::ctx_a();
    const auto b = fixtures::ctx_b();
    CHECK(attribute_derive(a, fixtures::attrs(a, {0})) == set(a, {"g1"}));
    CHECK(attribute_derive(b, fixtures::attrs(b, {0})) == set(b, {"g1", "g3"}));
    CHECK(attribute_derive(b, b.no_attributes()) == b.all_objects());
    CHECK_THROWS_AS(attribute_derive(a, AttributeSet(5)), DimensionError);
}

TEST_CASE("closure values agree with the oracle") {
    const auto a = fixtures::ctx_a();
    const auto b = fixtures::ctx_b();
    const auto c = fixtures::ctx_c();
    CHECK(closure(a, a.no_objects()) == a.no_objects());
    CHECK(oracle::closure_mask(a, 0) == 0);
    CHECK(closure(b, set(b, {"g1"})) == set(b, {"g1", "g3"}));
    CHECK(oracle::closure_mask(b, 0b001) == 0b101);
    CHECK(closure(c, c.no_objects()) == set(c, {"h1"}));
    CHECK(oracle::closure_mask(c, 0) == 0b01);
}

TEST_CASE("closure counts calls") {
    const auto b = fixtures::ctx_b();
    WorkCounters w;
    closure(b, b.no_objects(), &w);
    closure(b, b.all_objects(), &w);
    CHECK(w.closures == 2);
    CHECK(w.extent_enumerations == 0);
}

TEST_CASE("enumerate_extents examples") {
    const auto a = fixtures::ctx_a();
    const auto b = fixtures::ctx_b();
    const auto c = fixtures::ctx_c();
    CHECK(enumerate_extents(a) == family(a, {{}, {"g1"}, {"g2"}, {"g1", "g2"}}));
    CHECK(enumerate_extents(b) == family(b, {{}, {"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}}));
    CHECK(enumerate_extents(c) == family(c, {{"h1"}, {"h1", "h2"}}));
    for (const auto& ctx : {a, b, c}) CHECK(enumerate_extents(ctx) == oracle::extents_by_definition(ctx));
}

TEST_CASE("enumerate_extents capacity bound") {
    EnumerationLimits limits;
    limits.max_objects = 2;
    CHECK_THROWS_AS(enumerate_extents(fixtures::ctx_b(), limits), CapacityError);
    CHECK_NOTHROW(enumerate_extents(fixtures::ctx_a(), limits));
    limits = {};
    limits.max_extents = 3;
    CHECK_THROWS_AS(enumerate_extents_next_closure(fixtures::ctx_b(), nullptr, limits.max_extents), CapacityError);
}

TEST_CASE("is_extent") {
    const auto a = fixtures::ctx_a();
    const auto b = fixtures::ctx_b();
    CHECK(is_extent(a, set(a, {"g1"})));
    CHECK_FALSE(is_extent(b, set(b, {"g1"})));
    for (const auto& ctx : {a, b, fixtures::ctx_c(), fixtures::ctx_d()}) CHECK(is_extent(ctx, ctx.all_objects()));
}

TEST_CASE("concept_of pairs extent and intent") {
    const auto b = fixtures::ctx_b();
    const auto c = concept_of(b, set(b, {"g1"}));
    CHECK(c.extent == set(b, {"g1", "g3"}));
    CHECK(c.intent == fixtures::attrs(b, {0}));
    CHECK(attribute_derive(b, c.intent) == c.extent);
    CHECK(object_derive(b, c.extent) == c.intent);
}

TEST_CASE("subcontext") {
    const auto b = fixtures::ctx_b();
    CHECK(subcontext(b, set(b, {"g1", "g2"})) == fixtures::ctx_a());
    CHECK(subcontext(b, b.all_objects()) == b);
    const auto single = subcontext(b, set(b, {"g3"}));
    CHECK(single.object_count() == 1);
    CHECK(single.row(0) == fixtures::attrs(b, {0}));
    CHECK(single.attributes() == b.attributes());
    CHECK_THROWS_AS(subcontext(b, b.no_objects()), EmptySubcontextError);
}

TEST_CASE("with_object appends a row") {
    const auto a = fixtures::ctx_a();
    CHECK(with_object(a, "g3", fixtures::attrs(a, {0})) == fixtures::ctx_b());
    CHECK_THROWS_AS(with_object(a, "g1", fixtures::attrs(a, {0})), ParseError);
    CHECK_THROWS_AS(with_object(a, "g3", AttributeSet(3)), DimensionError);
}

TEST_CASE("Galois laws on random contexts") {
    std::mt19937_64 rng(11);
    for (const auto& ctx : oracle::random_contexts(99, 60, 8)) {
        const auto n = ctx.object_count();
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
        for (int k = 0; k < 20; ++k) {
            const auto a1 = ObjectSet::from_mask(n, pick(rng));
            const auto a2 = a1 | ObjectSet::from_mask(n, pick(rng));
            CHECK(a1.is_subset_of(closure(ctx, a1)));
            CHECK(object_derive(ctx, a2).is_subset_of(object_derive(ctx, a1)));
            CHECK(object_derive(ctx, closure(ctx, a1)) == object_derive(ctx, a1));
            CHECK(closure(ctx, closure(ctx, a1)) == closure(ctx, a1));
            CHECK(closure(ctx, a1).is_subset_of(closure(ctx, a2)));
        }
    }
}

TEST_CASE("the three enumeration paths agree and are intersection-closed") {
    for (const auto& ctx : oracle::random_contexts(5, 80, 8)) {
        const auto brute = enumerate_extents_brute(ctx, Execution::Serial);
        CHECK(brute == enumerate_extents_brute(ctx, Execution::Parallel));
        CHECK(brute == enumerate_extents_next_closure(ctx));
        CHECK(brute == oracle::extents_by_definition(ctx));
        CHECK(brute.front() == closure(ctx, ctx.no_objects()));
        CHECK(brute.back() == ctx.all_objects());
        for (const auto& x : brute)
            for (const auto& y : brute) CHECK(std::binary_search(brute.begin(), brute.end(), x & y, CanonicalLess{}));
    }
}

TEST_CASE("derivation in a subcontext matches the full context") {
    for (const auto& ctx : oracle::random_contexts(17, 40, 7)) {
        const auto n = ctx.object_count();
        auto keep = ctx.all_objects();
        keep.reset(n - 1);
        const auto sub = subcontext(ctx, keep);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
            const auto a = ObjectSet::from_mask(n - 1, m);
            const auto lifted = ObjectSet::from_mask(n, m);
            CHECK(object_derive(sub, a) == object_derive(ctx, lifted));
        }
    }
}

TEST_CASE("enumeration output is in canonical order") {
    const auto d = fixtures::ctx_d();
    const auto e = enumerate_extents(d);
    CHECK(e.size() == 16);
    CHECK(std::is_sorted(e.begin(), e.end(), CanonicalLess{}));
    CHECK(e[1] == set(d, {"a"}));
    CHECK(e[5] == set(d, {"a", "b"}));
}

TEST_CASE("BOXTREE_MAX_OBJECTS overrides the bound") {
    setenv("BOXTREE_MAX_OBJECTS", "3", 1);
    CHECK(EnumerationLimits::from_environment().max_objects == 3);
    setenv("BOXTREE_MAX_OBJECTS", "junk", 1);
    CHECK(EnumerationLimits::from_environment().max_objects == EnumerationLimits{}.max_objects);
    unsetenv("BOXTREE_MAX_OBJECTS");
}

}
