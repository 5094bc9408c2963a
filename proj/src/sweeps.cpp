#include "boxtree/sweeps.hpp"

#include "boxtree/commands.hpp"
#include "boxtree/format.hpp"

#include <algorithm>
#include <exception>
#include <set>

namespace boxtree::verify {

namespace {

using oracle::OracleReport;

EnumerationLimits sweep_limits() {
    EnumerationLimits limits;
    limits.max_tree_lattice = 64;
    return limits;
}

class Recorder {
public:
    Recorder(const FormalContext& ctx, OracleReport& report) : ctx_(ctx), report_(report) {}

    void count() { ++report_.instances; }
    void skip() { ++report_.skipped; }
    void check(bool ok, const std::string& what, const std::string& expected, const std::string& actual) {
        if (!ok) report_.mismatches.push_back({oracle::digest(ctx_) + " " + what, expected, actual});
    }
    void check(bool ok, const std::string& what) { check(ok, what, "true", "false"); }

private:
    const FormalContext& ctx_;
    OracleReport& report_;
};

template <class Body>
OracleReport run_sweep(const char* subject, const std::vector<FormalContext>& corpus, const SweepOptions& opt,
                       Body body) {
    std::vector<OracleReport> parts(corpus.size());
    auto one = [&](std::size_t i) {
        parts[i].subject = subject;
        Recorder rec(corpus[i], parts[i]);
        try {
            body(corpus[i], rec);
        } catch (const std::exception& e) {
            rec.check(false, "exception", "no exception", e.what());
        }
    };
    const auto n = static_cast<long>(corpus.size());
    if (opt.execution == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    } else {
        for (long i = 0; i < n; ++i) one(static_cast<std::size_t>(i));
    }
    OracleReport out;
    out.subject = subject;
    for (const auto& p : parts) out.merge(p);
    return out;
}

std::string show(const FormalContext& ctx, const std::vector<ObjectSet>& sets) {
    std::string out = "[";
    for (std::size_t i = 0; i < sets.size(); ++i) out += (i ? "," : "") + format_set(ctx, sets[i]);
    return out + "]";
}

bool has(const std::vector<ObjectSet>& sorted, const ObjectSet& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s, CanonicalLess{});
}

ObjectSet from_mask(std::size_t n, oracle::Mask m) {
    ObjectSet out(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1U) out.set(i);
    return out;
}

oracle::Mask to_mask(const ObjectSet& s) {
    oracle::Mask m = 0;
    s.for_each([&](std::size_t i) { m |= oracle::Mask{1} << i; });
    return m;
}

ObjectSet oracle_closure(const FormalContext& ctx, const ObjectSet& s) {
    return from_mask(ctx.object_count(), oracle::closure_mask(ctx, to_mask(s)));
}

std::vector<ObjectSet> minimal_nonzero(const std::vector<ObjectSet>& elements, const ObjectSet& zero) {
    std::vector<ObjectSet> out;
    for (const auto& e : elements) {
        if (e == zero) continue;
        bool minimal = std::none_of(elements.begin(), elements.end(),
                                    [&](const ObjectSet& f) { return f != zero && f.is_proper_subset_of(e); });
        if (minimal) out.push_back(e);
    }
    return out;
}

std::vector<ObjectSet> atoms_and_top(const BoxLattice& lat) {
    auto out = lat.atoms();
    if (!lat.contains(lat.top()) || lat.top() == lat.zero()) return {};
    out.push_back(lat.top());
    return make_tree(out).members;
}

/// Trees of B(K_H) to push through the extension: exhaustive for small G,
/// otherwise the greedy maximal tree and atoms plus top.
std::vector<std::vector<ObjectSet>> trees_of(const BoxLattice& lat, std::size_t g_objects, const SweepOptions& opt) {
    std::vector<std::vector<ObjectSet>> out;
    if (lat.size() < 2) return out;
    if (g_objects <= opt.exhaustive_objects) {
        for (auto& t : enumerate_maximal_trees(lat, SIZE_MAX, sweep_limits())) out.push_back(std::move(t.members));
        return out;
    }
    out.push_back(build_maximal_tree(lat).members);
    auto flat = atoms_and_top(lat);
    if (!flat.empty() && flat != out.front()) out.push_back(std::move(flat));
    return out;
}

std::vector<ObjectSet> canonical(std::vector<ObjectSet> v) {
    canonicalize(v);
    return v;
}

}  // namespace

std::vector<FormalContext> standard_corpus(std::uint64_t seed, std::size_t random_count, std::size_t max_dim) {
    auto out = oracle::exhaustive_contexts(3, 3);
    auto random = oracle::random_contexts(seed, random_count, max_dim);
    out.insert(out.end(), random.begin(), random.end());
    return out;
}

OracleReport sweep_box_extents(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("box-extents", corpus, opt, [](const FormalContext& ctx, Recorder& rec) {
        rec.count();
        const auto n = ctx.object_count();
        const auto expected = oracle::box_extents_by_definition(ctx);
        const auto lat = box_extents(ctx);
        rec.check(lat.elements() == expected, "box_extents", show(ctx, expected), show(ctx, lat.elements()));

        const auto finest = finest_extent_partition(ctx);
        for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
            const auto s = from_mask(n, m);
            rec.check(is_box_extent(ctx, finest, s) == has(expected, s), "is_box_extent " + format_set(ctx, s),
                      has(expected, s) ? "true" : "false", has(expected, s) ? "false" : "true");
        }

        const auto extents = oracle::extents_by_definition(ctx);
        const auto lib = enumerate_extents(ctx);
        rec.check(lib == extents, "enumerate_extents", show(ctx, extents), show(ctx, lib));
        const auto lectic = enumerate_extents_next_closure(ctx);
        rec.check(lectic == extents, "next_closure", show(ctx, extents), show(ctx, lectic));

        const auto blocks = canonical(oracle::finest_partition_by_definition(ctx));
        rec.check(finest.blocks == blocks, "finest partition", show(ctx, blocks), show(ctx, finest.blocks));
        rec.check(finest.degenerate == (oracle::closure_mask(ctx, 0) != 0), "degenerate flag");
        rec.check(lat.atoms() == minimal_nonzero(expected, lat.zero()), "atoms");
    });
}

OracleReport sweep_fates(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("fates", corpus, opt, [](const FormalContext& ctx, Recorder& rec) {
        const auto n = ctx.object_count();
        if (n < 2) return;
        const auto full_box = oracle::box_extents_by_definition(ctx);
        const auto full_blocks = oracle::finest_partition_by_definition(ctx);
        // Without a finest partition z's box is not defined; only the two set
        // conditions are compared there, not membership in B(K).
        const bool degenerate = oracle::closure_mask(ctx, 0) != 0;
        if (degenerate) rec.skip();
        for (std::size_t z = 0; z < n; ++z) {
            WorkCounters zbox_work;
            const auto prob = ExtensionProblem::split_at(ctx, z, nullptr, &zbox_work);
            const auto& sub = prob.sub();
            const std::string where = "z=" + ctx.object_name(z) + " ";

            ObjectSet zbox(n);
            for (const auto& b : full_blocks)
                if (b.test(z)) zbox = b;
            rec.check(prob.z_box() == zbox, where + "z box", format_set(ctx, zbox), format_set(ctx, prob.z_box()));
            rec.check(zbox_work.lattice_builds == 0 && zbox_work.extent_enumerations == 0, where + "z box from scratch");

            const auto sub_box = oracle::box_extents_by_definition(sub);
            // Blocks of the finest partition of K: z's box plus the blocks of
            // K_H that miss it.
            if (!degenerate) {
                std::vector<ObjectSet> predicted{zbox};
                for (const auto& b : oracle::finest_partition_by_definition(sub)) {
                    const auto lifted = prob.lift(b);
                    if (!lifted.intersects(zbox)) predicted.push_back(lifted);
                }
                rec.check(canonical(predicted) == canonical(full_blocks), where + "blocks after extension",
                          show(ctx, canonical(full_blocks)), show(ctx, canonical(predicted)));
            }
            for (const auto& e : full_box) {
                const auto r = prob.restrict(e);
                rec.check(has(sub_box, r), where + "restriction of " + format_set(ctx, e) + " is a box extent");
                if (!degenerate && !e.test(z))
                    rec.check(!e.intersects(zbox), where + format_set(ctx, e) + " avoids z and its box");
            }
            if (n <= 8)
                for (const auto& partition : oracle::all_extent_partitions(ctx)) {
                    std::vector<ObjectSet> restricted;
                    for (const auto& b : partition)
                        if (auto r = prob.restrict(b); !r.empty()) restricted.push_back(r);
                    rec.check(static_cast<bool>(is_extent_partition(sub, restricted)),
                              where + "restricted partition " + show(sub, restricted));
                }

            const auto zbox_rest = prob.restrict(zbox);
            for (const auto& e : sub_box) {
                rec.count();
                const auto lifted = prob.lift(e);
                const auto with_z = prob.lift_with_z(e);
                const bool survives = (oracle_closure(ctx, lifted) & zbox).empty();
                const bool closes = oracle_closure(ctx, with_z) == with_z;
                const bool extends = zbox_rest.is_subset_of(e) && closes;
                const Fate expected = survives ? Fate::Survives : extends ? Fate::Extends : Fate::Drops;

                WorkCounters work;
                const auto record = fate(prob, e, &work);
                rec.check(record.fate == expected, where + "fate of " + format_set(sub, e), fate_name(expected),
                          fate_name(record.fate));
                if (degenerate) continue;
                rec.check(survives == has(full_box, lifted), where + "survival matches membership in B(K) for " +
                                                                 format_set(sub, e));
                rec.check(extends == has(full_box, with_z), where + "extension matches membership in B(K) for " +
                                                                format_set(sub, e));
                if (!prob.nonstandard())
                    rec.check(work.closures <= 1, where + "one closure per fate", "<=1", std::to_string(work.closures));
            }
        }
    });
}

OracleReport sweep_tree_extension(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("tree-extension", corpus, opt, [&opt](const FormalContext& ctx, Recorder& rec) {
        const auto n = ctx.object_count();
        if (n < 2) return;
        const auto full_box = oracle::box_extents_by_definition(ctx);
        const auto zero = oracle_closure(ctx, ctx.no_objects());
        const auto atoms = minimal_nonzero(full_box, zero);
        for (std::size_t z = 0; z < n; ++z) {
            const auto prob = ExtensionProblem::split_at(ctx, z);
            const auto sub_lat = box_extents(prob.sub());
            const std::string where = "z=" + ctx.object_name(z) + " ";
            for (const auto& tree : trees_of(sub_lat, n, opt)) {
                rec.count();
                const auto label = where + "T=" + show(prob.sub(), tree) + " ";
                if (prob.nonstandard()) {
                    const auto ext = extend_tree_general(prob, tree);
                    rec.check(oracle::tree_check_by_definition(full_box, zero, ext.tree.members),
                              label + "repaired extension is a tree");
                    continue;
                }
                WorkCounters work;
                const auto split = split_tree(prob, tree, &work);
                const auto members = canonical(tree);
                for (const auto& e : split.ideal_part)
                    for (const auto& f : members)
                        if (f.is_subset_of(e)) rec.check(has(split.ideal_part, f), label + "survivors form a down-set");
                for (std::size_t i = 0; i < split.chain_part.size(); ++i)
                    for (std::size_t j = i + 1; j < split.chain_part.size(); ++j)
                        rec.check(split.chain_part[i].comparable_with(split.chain_part[j]),
                                  label + "extenders form a chain");
                rec.check(std::find(split.chain_part.begin(), split.chain_part.end(), prob.sub().all_objects()) !=
                              split.chain_part.end(),
                          label + "H extends");
                for (const auto& e : split.ideal_part)
                    rec.check(std::find(split.chain_part.begin(), split.chain_part.end(), e) == split.chain_part.end(),
                              label + "survivors and extenders are disjoint");
                rec.check(work.closures <= tree.size() + 1, label + "closure budget",
                          "<=" + std::to_string(tree.size() + 1), std::to_string(work.closures));
                rec.check(work.lattice_builds == 0 && work.extent_enumerations == 0, label + "no lattice of K built");

                const auto plain = extend_tree(prob, tree, false);
                rec.check(oracle::tree_check_by_definition(full_box, zero, plain.tree.members),
                          label + "extension is a tree of B(K)", "tree", show(ctx, plain.tree.members));
                const auto with_atom = extend_tree(prob, tree, true);
                rec.check(oracle::tree_check_by_definition(full_box, zero, with_atom.tree.members),
                          label + "extension with z box is a tree of B(K)", "tree",
                          show(ctx, with_atom.tree.members));
                const bool has_sub_atoms = std::all_of(sub_lat.atoms().begin(), sub_lat.atoms().end(),
                                                       [&](const ObjectSet& a) { return has(members, a); });
                if (has_sub_atoms)
                    for (const auto& a : atoms)
                        rec.check(with_atom.tree.contains(a), label + "atom " + format_set(ctx, a) + " covered");
            }
        }
    });
}

OracleReport sweep_round_trip(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("round-trip", corpus, opt, [&opt](const FormalContext& ctx, Recorder& rec) {
        const auto n = ctx.object_count();
        if (n < 2) return;
        if (oracle::closure_mask(ctx, 0) != 0) {
            rec.skip();
            return;
        }
        const auto lat = box_extents(ctx);
        const auto trees = trees_of(lat, n, opt);
        for (std::size_t z = 0; z < n; ++z) {
            const auto prob = ExtensionProblem::split_at(ctx, z);
            if (prob.nonstandard()) continue;
            const auto sub_lat = box_extents(prob.sub());
            std::vector<ClassificationTree> sub_maximal;
            if (n <= opt.maximal_preimage_objects && sub_lat.size() > 1)
                sub_maximal = enumerate_maximal_trees(sub_lat, SIZE_MAX, sweep_limits());
            const std::string where = "z=" + ctx.object_name(z) + " ";
            for (const auto& tg : trees) {
                rec.count();
                const auto label = where + "T_G=" + show(ctx, tg) + " ";
                const auto rt = round_trip(prob, tg);
                rec.check(rt.rebuilt.members == canonical(tg), label + "restrict then extend", show(ctx, canonical(tg)),
                          show(ctx, rt.rebuilt.members));
                rec.check(is_maximal_tree(sub_lat, rt.completed.members), label + "completion is maximal in B(K_H)");
                if (!sub_maximal.empty()) {
                    const bool found = std::any_of(sub_maximal.begin(), sub_maximal.end(), [&](const ClassificationTree& m) {
                        return extend_tree(prob, m.members, false).tree.members == canonical(tg);
                    });
                    rec.check(found, label + "some maximal tree of B(K_H) extends to T_G");
                }
            }
        }
    });
}

OracleReport sweep_tree_equivalences(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("tree-equivalences", corpus, opt, [&opt](const FormalContext& ctx, Recorder& rec) {
        const auto lat = box_extents(ctx);
        if (lat.size() > opt.family_scan_lattice) return;
        const auto nz = lat.nonzero_elements();
        const auto k = nz.size();
        const auto extents = enumerate_extents(ctx);
        const auto& ext_zero = extents.front();
        const auto all = ctx.all_objects();

        std::set<std::vector<ObjectSet>, bool (*)(const std::vector<ObjectSet>&, const std::vector<ObjectSet>&)> maximal(
            &family_less<ObjectTag>);
        for (auto& t : oracle::backtrack_maximal_trees(lat.elements(), lat.zero())) maximal.insert(canonical(t));

        auto complete_in_ext = [&](const std::vector<ObjectSet>& fam) {
            if (!oracle::tree_check_by_definition(extents, ext_zero, fam)) return false;
            for (const auto& chain : maximal_antichains(fam)) {
                auto covered = ctx.no_objects();
                for (const auto& e : chain) covered |= e;
                if (covered != all) return false;
            }
            return true;
        };

        std::vector<char> complete(std::size_t{1} << k, 0);
        std::vector<char> is_max(std::size_t{1} << k, 0);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            rec.count();
            std::vector<ObjectSet> fam;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1U) fam.push_back(nz[i]);
            const auto label = "T=" + show(ctx, fam) + " ";

            const bool tree_o = oracle::tree_check_by_definition(lat.elements(), lat.zero(), fam);
            const bool tree_l = static_cast<bool>(is_classification_tree(lat, fam));
            rec.check(tree_o == tree_l, label + "tree predicate agrees with definition");

            const bool max_o = maximal.count(fam) != 0;
            is_max[mask] = max_o;
            auto with_zero = fam;
            with_zero.push_back(lat.zero());
            rec.check(max_o == is_cd_base(lat, with_zero), label + "maximal tree iff CD-base with zero",
                      max_o ? "true" : "false", max_o ? "false" : "true");
            if (tree_l) rec.check(is_maximal_tree(lat, fam) == max_o, label + "is_maximal_tree");
            if (max_o)
                for (const auto& a : lat.atoms()) rec.check(has(fam, a), label + "maximal tree holds every atom");

            const bool lhs = complete_in_ext(fam);
            const bool rhs = is_complete_tree_in_box_lattice(lat, fam);
            rec.check(lhs == rhs, label + "complete in Ext iff complete antichains in B", lhs ? "true" : "false",
                      rhs ? "true" : "false");
            rec.check(lhs == is_complete_classification_tree(ctx, extents, fam), label + "library completeness");
            complete[mask] = lhs;
        }

        // Any complete tree of Ext lies in B (checked below on small Ext), so
        // maximality among complete trees can be decided over subsets of B.
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            bool max_complete = complete[mask];
            for (std::uint64_t other = 1; max_complete && other < (std::uint64_t{1} << k); ++other)
                if (other != mask && (other & mask) == mask && complete[other]) max_complete = false;
            rec.check(max_complete == static_cast<bool>(is_max[mask]),
                      "mask=" + std::to_string(mask) + " maximal in B iff maximal complete in Ext");
        }

        std::vector<ObjectSet> ext_nz;
        for (const auto& e : extents)
            if (e != ext_zero) ext_nz.push_back(e);
        if (ext_nz.size() > opt.family_scan_lattice) return;
        // With a nonempty zero, overlapping extents above it can cover G
        // without being box extents, so the Ext side is only scanned when
        // the zero is empty.
        if (!ext_zero.empty()) {
            rec.skip();
            return;
        }
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ext_nz.size()); ++mask) {
            std::vector<ObjectSet> fam;
            bool inside_b = true;
            for (std::size_t i = 0; i < ext_nz.size(); ++i)
                if ((mask >> i) & 1U) {
                    fam.push_back(ext_nz[i]);
                    inside_b = inside_b && lat.contains(ext_nz[i]);
                }
            const bool lhs = complete_in_ext(fam);
            const bool rhs = inside_b && is_complete_tree_in_box_lattice(lat, fam);
            rec.check(lhs == rhs, "T=" + show(ctx, fam) + " complete in Ext iff complete antichains in B (Ext scan)",
                      lhs ? "true" : "false", rhs ? "true" : "false");
        }
    });
}

OracleReport sweep_listing(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("listing", corpus, opt, [&opt](const FormalContext& ctx, Recorder& rec) {
        const auto n = ctx.object_count();
        if (n < 2) return;
        const auto full_box = oracle::box_extents_by_definition(ctx);
        for (std::size_t z = 0; z < n; ++z) {
            const auto prob = ExtensionProblem::split_at(ctx, z);
            if (prob.nonstandard()) continue;
            const auto sub_lat = box_extents(prob.sub());
            const std::string where = "z=" + ctx.object_name(z) + " ";
            for (const auto& tree : trees_of(sub_lat, n, opt)) {
                rec.count();
                const auto members = canonical(tree);
                const auto split = split_tree(prob, members);
                const auto listing = lista_fa(members, prob, ListaMode::Normative);
                std::vector<ObjectSet> s;
                for (const auto& e : split.chain_part) s.push_back(prob.lift_with_z(e));
                rec.check(canonical(listing.s) == canonical(s), where + "T=" + show(prob.sub(), members) + " S",
                          show(ctx, canonical(s)), show(ctx, canonical(listing.s)));
                rec.check(canonical(listing.f) == canonical(split.ideal_part),
                          where + "T=" + show(prob.sub(), members) + " F", show(prob.sub(), split.ideal_part),
                          show(prob.sub(), canonical(listing.f)));
            }

            // Over all of B(K_H): F is what stays a box extent, S what becomes one with z.
            if (oracle::closure_mask(ctx, 0) != 0) {
                rec.skip();
                continue;
            }
            rec.count();
            const auto listing = lista_fa(sub_lat.elements(), prob, ListaMode::Normative);
            std::vector<ObjectSet> s, f;
            for (const auto& e : sub_lat.elements()) {
                if (has(full_box, prob.lift(e))) f.push_back(e);
                if (has(full_box, prob.lift_with_z(e))) s.push_back(prob.lift_with_z(e));
            }
            rec.check(canonical(listing.s) == canonical(s), where + "S over B(K_H)", show(ctx, canonical(s)),
                      show(ctx, canonical(listing.s)));
            rec.check(canonical(listing.f) == canonical(f), where + "F over B(K_H)", show(prob.sub(), canonical(f)),
                      show(prob.sub(), canonical(listing.f)));
        }
    });
}

OracleReport sweep_extend_counters(const std::vector<FormalContext>& corpus, const SweepOptions& opt) {
    return run_sweep("extend-counters", corpus, opt, [](const FormalContext& ctx, Recorder& rec) {
        const auto n = ctx.object_count();
        if (n < 2) return;
        for (std::size_t z = 0; z < n; ++z) {
            auto keep = ctx.all_objects();
            keep.reset(z);
            const auto sub = subcontext(ctx, keep);
            const auto sub_lat = box_extents(sub);
            if (sub_lat.size() < 2) continue;
            ExtendRequest request{sub, build_maximal_tree(sub_lat).members, ctx.object_name(z), ctx.row(z)};
            request.allow_repair = true;
            request.listing = false;
            rec.count();
            const auto outcome = run_extend(request);
            const std::string where = "z=" + ctx.object_name(z) + " ";
            if (!outcome.repaired) rec.check(outcome.efficient(), where + "extend core within budget, no lattice of K");
            const auto& full = outcome.problem.full();
            const auto full_box = oracle::box_extents_by_definition(full);
            rec.check(oracle::tree_check_by_definition(full_box, oracle_closure(full, full.no_objects()),
                                                       outcome.extension.tree.members),
                      where + "extended tree passes the tree check");
        }
    });
}

}  // namespace boxtree::verify
