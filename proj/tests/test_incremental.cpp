#include "fixtures.hpp"

#include "boxtree/format.hpp"
#include "boxtree/incremental.hpp"
#include "boxtree/oracle.hpp"

#include <doctest.h>

using namespace boxtree;
using fixtures::family;
using fixtures::set;

namespace {

// ctx_b split at g3: H = {g1,g2} is ctx_a.
ExtensionProblem ctx_b_problem() { return ExtensionProblem::split_at(fixtures::ctx_b(), 2); }

std::vector<ObjectSet> over_h(std::initializer_list<std::initializer_list<const char*>> members) {
    return family(fixtures::ctx_a(), members);
}

ObjectSet h(std::initializer_list<const char*> names) { return set(fixtures::ctx_a(), names); }
ObjectSet g(std::initializer_list<const char*> names) { return set(fixtures::ctx_b(), names); }

oracle::Mask mask(const ObjectSet& s) {
    oracle::Mask m = 0;
    s.for_each([&](std::size_t i) { m |= oracle::Mask{1} << i; });
    return m;
}

}  // namespace

TEST_SUITE("incremental") {

TEST_CASE("ctx_b problem") {
    const auto p = ctx_b_problem();
    CHECK(p.sub() == fixtures::ctx_a());
    CHECK(p.z() == 2);
    CHECK(p.z_box() == g({"g1", "g3"}));
    CHECK(p.z_box_rest() == h({"g1"}));
    CHECK_FALSE(p.nonstandard());
    CHECK(p.lift(h({"g2"})) == g({"g2"}));
    CHECK(p.lift_with_z(h({"g1"})) == g({"g1", "g3"}));
    CHECK(p.restrict(g({"g1", "g3"})) == h({"g1"}));
    const auto appended = ExtensionProblem::append(fixtures::ctx_a(), "g3", fixtures::attrs(fixtures::ctx_a(), {0}));
    CHECK(appended.full() == fixtures::ctx_b());
    CHECK(appended.z_box() == p.z_box());
}

TEST_CASE("z box work is charged without building a lattice") {
    WorkCounters sub_work, zbox_work;
    ExtensionProblem::split_at(fixtures::ctx_b(), 2, &sub_work, &zbox_work);
    CHECK(zbox_work.lattice_builds == 0);
    CHECK(zbox_work.extent_enumerations == 0);
    CHECK(zbox_work.closures > 0);
    CHECK(sub_work.lattice_builds == 0);
}

TEST_CASE("fate examples") {
    const auto p = ctx_b_problem();
    WorkCounters w;
    const auto s = fate(p, h({"g2"}), &w);
    CHECK(s.fate == Fate::Survives);
    CHECK(s.witness == ObjectSet(3));
    CHECK(s.witness_kind == Witness::ZboxMeetClosure);
    const auto e = fate(p, h({"g1"}), &w);
    CHECK(e.fate == Fate::Extends);
    CHECK(e.witness == g({"g1", "g3"}));
    const auto top = fate(p, h({"g1", "g2"}), &w);
    CHECK(top.fate == Fate::Extends);
    CHECK(top.witness == g({"g1", "g2", "g3"}));
    CHECK(w.closures <= 3);
    CHECK_THROWS_AS(fate(p, ObjectSet(3), &w), DimensionError);
}

TEST_CASE("fate rejects non-box extents") {
    const auto p = ExtensionProblem::split_at(fixtures::table({"a", "b", "c", "z"}, {"m1", "m2"},
                                                              {"X.", "XX", ".X", "X."}),
                                              3);
    CHECK_THROWS_AS(fate(p, set(p.sub(), {"a"})), NotABoxExtentError);
}

TEST_CASE("fate agrees with the two set conditions on random contexts") {
    for (const auto& ctx : oracle::random_contexts(3, 80, 7)) {
        if (!closure(ctx, ctx.no_objects()).empty()) continue;
        for (std::size_t z = 0; z < ctx.object_count(); ++z) {
            const auto p = ExtensionProblem::split_at(ctx, z);
            for (const auto& e : oracle::box_extents_by_definition(p.sub())) {
                const auto lifted = p.lift(e);
                auto with_z = lifted;
                with_z.set(z);
                const auto closed = ObjectSet::from_mask(ctx.object_count(), oracle::closure_mask(ctx, mask(lifted)));
                const bool survives = !p.z_box().intersects(closed);
                const bool extends = (p.z_box() - ObjectSet(ctx.object_count(), {z})).is_subset_of(lifted) &&
                                     oracle::is_extent_mask(ctx, mask(with_z));
                const auto f = fate(p, e).fate;
                CHECK(f == (survives ? Fate::Survives : extends ? Fate::Extends : Fate::Drops));
                if (!p.nonstandard()) CHECK_FALSE((survives && extends));
            }
        }
    }
}

TEST_CASE("restrict_tree examples") {
    const auto p = ctx_b_problem();
    CHECK(restrict_tree(p, family(fixtures::ctx_b(), {{"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}})).members ==
          over_h({{"g1"}, {"g2"}, {"g1", "g2"}}));
    CHECK(restrict_tree(p, {g({"g1", "g2", "g3"})}).members == over_h({{"g1", "g2"}}));
    CHECK_THROWS_AS(restrict_tree(p, family(fixtures::ctx_b(), {{"g2"}, {"g1", "g3"}})), NotATreeError);
}

TEST_CASE("restrict_tree is the identity when z sits alone") {
    // z has its own attribute, so {z} is a block; every other member avoids z.
    const auto full = fixtures::table({"a", "b", "z"}, {"ma", "mb", "mz"}, {"X..", ".X.", "..X"});
    const auto p = ExtensionProblem::split_at(full, 2);
    const auto t = family(full, {{"a"}, {"b"}, {"a", "b", "z"}});
    CHECK(restrict_tree(p, t).members == family(p.sub(), {{"a"}, {"b"}, {"a", "b"}}));
}

TEST_CASE("split_tree examples") {
    const auto p = ctx_b_problem();
    const auto s = split_tree(p, over_h({{"g1"}, {"g2"}, {"g1", "g2"}}));
    CHECK(s.ideal_part == over_h({{"g2"}}));
    CHECK(s.chain_part == over_h({{"g1"}, {"g1", "g2"}}));
    CHECK(s.fates.size() == 3);
    const auto top = split_tree(p, {h({"g1", "g2"})});
    CHECK(top.ideal_part.empty());
    CHECK(top.chain_part == over_h({{"g1", "g2"}}));
}

TEST_CASE("split_tree with no member meeting the rest of the z box leaves H alone in the chain") {
    const auto p = ctx_b_problem();
    const auto s = split_tree(p, over_h({{"g2"}, {"g1", "g2"}}));
    CHECK(s.ideal_part == over_h({{"g2"}}));
    CHECK(s.chain_part == over_h({{"g1", "g2"}}));
}

TEST_CASE("split_tree validates its input") {
    const auto p = ctx_b_problem();
    CHECK_THROWS_AS(split_tree(p, over_h({{"g1"}, {"g2"}})), NotATreeError);
    CHECK_THROWS_AS(split_tree(p, over_h({{}, {"g1", "g2"}})), NotATreeError);
    const auto lone = ExtensionProblem::split_at(fixtures::table({"a", "z"}, {"ma", "mz"}, {"X.", ".X"}), 1);
    REQUIRE(lone.nonstandard());
    CHECK_THROWS_AS(split_tree(lone, {lone.sub().all_objects()}), NonstandardProblemError);
}

TEST_CASE("extend_tree examples") {
    const auto p = ctx_b_problem();
    const auto expected = family(fixtures::ctx_b(), {{"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}});
    WorkCounters w;
    const auto t = over_h({{"g1"}, {"g2"}, {"g1", "g2"}});
    CHECK(extend_tree(p, t, false, &w).tree.members == expected);
    CHECK(w.closures <= t.size() + 1);
    CHECK(w.lattice_builds == 0);
    CHECK(extend_tree(p, t, true).tree.members == expected);
    const auto g_only = std::vector<ObjectSet>{g({"g1", "g2", "g3"})};
    CHECK(extend_tree(p, {h({"g1", "g2"})}, false).tree.members == g_only);
    CHECK(extend_tree(p, {h({"g1", "g2"})}, true).tree.members == family(fixtures::ctx_b(), {{"g1", "g3"}, {"g1", "g2", "g3"}}));
    const auto lat = box_extents(p.full());
    CHECK(oracle::tree_check_by_definition(lat.elements(), lat.zero(), expected));
}

TEST_CASE("extend_tree_general") {
    SUBCASE("agrees with extend_tree on the standard ctx_b problem") {
        const auto p = ctx_b_problem();
        const auto t = over_h({{"g1"}, {"g2"}, {"g1", "g2"}});
        CHECK(extend_tree_general(p, t).tree == extend_tree(p, t, false).tree);
        CHECK(extend_tree_general(p, {h({"g1", "g2"})}).tree.members ==
              family(fixtures::ctx_b(), {{"g1", "g3"}, {"g1", "g2", "g3"}}));
    }
    SUBCASE("z alone in its block") {
        const auto full = fixtures::table({"a", "b", "z"}, {"ma", "mb", "mz"}, {"X..", ".X.", "..X"});
        const auto p = ExtensionProblem::split_at(full, 2);
        REQUIRE(p.nonstandard());
        const auto sub_lat = box_extents(p.sub());
        auto t = sub_lat.atoms();
        t.push_back(sub_lat.top());
        const auto out = extend_tree_general(p, t);
        CHECK(out.tree.contains(set(full, {"z"})));
        const auto lat = box_extents(full);
        CHECK(oracle::tree_check_by_definition(lat.elements(), lat.zero(), out.tree.members));
    }
    SUBCASE("random nonstandard problems always give a verified tree") {
        std::size_t seen = 0;
        for (const auto& ctx : oracle::random_contexts(77, 200, 6)) {
            if (!closure(ctx, ctx.no_objects()).empty()) continue;
            for (std::size_t z = 0; z < ctx.object_count(); ++z) {
                const auto p = ExtensionProblem::split_at(ctx, z);
                if (!p.nonstandard()) continue;
                ++seen;
                const auto sub_lat = box_extents(p.sub());
                const auto out = extend_tree_general(p, build_maximal_tree(sub_lat).members);
                const auto lat = box_extents(ctx);
                CHECK(oracle::tree_check_by_definition(lat.elements(), lat.zero(), out.tree.members));
                CHECK(out.tree.contains(p.z_box()));
            }
        }
        CHECK(seen > 0);
    }
}

TEST_CASE("round_trip examples") {
    const auto p = ctx_b_problem();
    const auto tg = family(fixtures::ctx_b(), {{"g2"}, {"g1", "g3"}, {"g1", "g2", "g3"}});
    const auto rt = round_trip(p, tg);
    CHECK(rt.restricted.members == over_h({{"g1"}, {"g2"}, {"g1", "g2"}}));
    CHECK(rt.rebuilt.members == tg);
    CHECK(rt.rebuilt_from_completed.members == tg);
    // one extent: z shares every attribute with the single other object
    const auto flat = fixtures::table({"a", "z"}, {"m"}, {"X", "X"});
    const auto fp = ExtensionProblem::split_at(flat, 1);
    CHECK(round_trip(fp, {flat.all_objects()}).rebuilt.members == std::vector<ObjectSet>{flat.all_objects()});
}

TEST_CASE("round trip over every maximal tree of random 6x4 contexts") {
    std::size_t checked = 0;
    for (const auto& ctx : oracle::random_contexts(64, 60, 6)) {
        if (ctx.object_count() != 6 && ctx.attribute_count() > 4) continue;
        if (!closure(ctx, ctx.no_objects()).empty()) continue;
        const auto lat = box_extents(ctx);
        if (lat.size() > 20) continue;
        const auto trees = enumerate_maximal_trees(lat);
        for (std::size_t z = 0; z < ctx.object_count(); ++z) {
            const auto p = ExtensionProblem::split_at(ctx, z);
            if (p.nonstandard()) continue;
            for (const auto& t : trees) {
                CHECK(round_trip(p, t.members).rebuilt == t);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("lista_fa on the ctx_b rows") {
    const auto p = ctx_b_problem();
    const auto ds = over_h({{}, {"g1"}, {"g2"}, {"g1", "g2"}});
    const auto normative = lista_fa(ds, p, ListaMode::Normative);
    CHECK(normative.s == family(fixtures::ctx_b(), {{"g1", "g3"}, {"g1", "g2", "g3"}}));
    CHECK(normative.f == over_h({{}, {"g2"}}));
    const auto faithful = lista_fa(ds, p, ListaMode::Faithful);
    CHECK(faithful.s == family(fixtures::ctx_b(), {{"g1", "g3"}, {"g1", "g2", "g3"}}));
    CHECK(faithful.f == over_h({{}, {"g1"}}));
    REQUIRE(faithful.deviations.size() == 2);
    CHECK(faithful.deviations[0].row == 2);
    CHECK(faithful.deviations[0].set == h({"g1"}));
    CHECK(faithful.deviations[1].row == 3);
    CHECK(faithful.deviations[1].set == h({"g2"}));
    CHECK(normative.deviations.size() == 2);
}

TEST_CASE("normative lista_fa matches split_tree") {
    const auto p = ctx_b_problem();
    const auto t = over_h({{"g1"}, {"g2"}, {"g1", "g2"}});
    const auto split = split_tree(p, t);
    const auto ext = extend_tree(p, t, false);
    const auto listing = lista_fa(t, p, ListaMode::Normative);
    CHECK(listing.f == split.ideal_part);
    std::vector<ObjectSet> lifted;
    for (const auto& e : split.chain_part) lifted.push_back(p.lift_with_z(e));
    canonicalize(lifted);
    auto s = listing.s;
    canonicalize(s);
    CHECK(s == lifted);
}

TEST_CASE("lista_fa dimension check") {
    const auto p = ctx_b_problem();
    CHECK_THROWS_AS(lista_fa({ObjectSet(3)}, p, ListaMode::Normative), DimensionError);
}

TEST_CASE("lista_fa text for the faithful ctx_b trace") {
    const auto p = ctx_b_problem();
    const auto ds = over_h({{}, {"g1"}, {"g2"}, {"g1", "g2"}});
    const std::string expected =
        "# boxtree lista-fa v1\n"
        "mode faithful\n"
        "columns g1 g2 g3\n"
        "z g3\n"
        "S 2\n"
        "S[1] 101 {g1,g3}\n"
        "S[2] 111 {g1,g2,g3}\n"
        "F 2\n"
        "F[1] 00 {}\n"
        "F[2] 10 {g1}\n"
        "deviation row=2 set={g1} faithful=SF normative=S\n"
        "deviation row=3 set={g2} faithful=- normative=F\n";
    CHECK(lista_fa_text(p, lista_fa(ds, p, ListaMode::Faithful)) == expected);
}

}
