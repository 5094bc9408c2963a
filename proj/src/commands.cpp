#include "boxtree/commands.hpp"

#include "boxtree/format.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace boxtree {

bool ExtendOutcome::efficient() const {
    return full_work.closures <= closure_budget && full_work.lattice_builds == 0 &&
           full_work.extent_enumerations == 0 && zbox_work.lattice_builds == 0 &&
           zbox_work.extent_enumerations == 0;
}

ExtendOutcome run_extend(const ExtendRequest& request, const EnumerationLimits& limits) {
    WorkCounters sub_work, zbox_work;
    auto problem = ExtensionProblem::append(request.sub, request.new_object, request.row, &sub_work, &zbox_work);
    ExtendOutcome out{std::move(problem), {}, false, std::nullopt, sub_work, zbox_work, {}, {},
                      request.tree.size() + 1};

    const auto& prob = out.problem;
    if (prob.nonstandard()) {
        if (!request.allow_repair)
            throw NonstandardProblemError("smallest box extent of " + request.new_object +
                                          " is a singleton; rerun with --allow-repair");
        out.extension = extend_tree_general(prob, request.tree, &out.full_work);
        out.repaired = true;
    } else {
        out.extension = extend_tree(prob, request.tree, request.with_atom, &out.full_work);
    }

    if (request.listing) {
        const auto rows = box_extents(prob.sub(), limits, &out.sub_work);
        out.listing = lista_fa(rows.elements(), prob, request.mode, &out.listing_work);
    }
    return out;
}

AttributeSet parse_row(const FormalContext& ctx, const std::string& bits) {
    AttributeSet row(ctx.attribute_count());
    std::size_t m = 0;
    for (char c : bits) {
        if (c == ',' || c == ' ') continue;
        if (c != '0' && c != '1') throw ParseError(std::string("row: unexpected character '") + c + "'");
        if (m >= ctx.attribute_count()) {
            ++m;
            continue;
        }
        if (c == '1') row.set(m);
        ++m;
    }
    if (m != ctx.attribute_count())
        throw DimensionError("row has " + std::to_string(m) + " cells, the context has " +
                             std::to_string(ctx.attribute_count()) + " attributes");
    return row;
}

std::string extend_report(const ExtendOutcome& outcome, bool with_atom) {
    const auto& prob = outcome.problem;
    const auto& full = prob.full();
    std::ostringstream out;
    out << "# boxtree extend " << kFormatVersion << '\n';
    out << "z " << full.object_name(prob.z()) << '\n';
    for (const auto& m : outcome.extension.tree.members) out << "tree " << format_set(full, m) << '\n';
    if (with_atom || outcome.repaired) out << "zbox " << format_set(full, prob.z_box()) << '\n';
    out << fate_table_text(prob, outcome.extension.split.fates);
    out << "closures_in_K " << outcome.full_work.closures << " budget " << outcome.closure_budget
        << " zbox_closures " << outcome.zbox_work.closures << " box_extents_of_K "
        << outcome.full_work.lattice_builds + outcome.zbox_work.lattice_builds << '\n';
    for (const auto& d : outcome.extension.diagnostics) out << "diagnostic " << d << '\n';
    if (outcome.listing && outcome.listing->mode == ListaMode::Faithful) {
        out << lista_fa_text(prob, *outcome.listing);
        if (!outcome.listing->deviations.empty())
            out << "notice faithful listing differs from the fate rule on " << outcome.listing->deviations.size()
                << " row(s)\n";
    }
    return out.str();
}

const char* bench_family_name(BenchFamily f) { return f == BenchFamily::Diagonal ? "diagonal" : "blocked"; }

BenchInstance bench_instance(BenchFamily family, std::size_t n, std::uint64_t seed, std::size_t blocks) {
    if (n < 2) throw ValidationError("bench sizes must be at least 2");
    std::mt19937_64 rng(seed ^ (n * 0x9E3779B97F4A7C15ULL));
    std::vector<std::string> objects, attributes;
    for (std::size_t i = 0; i < n; ++i) objects.push_back("g" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) attributes.push_back("m" + std::to_string(i + 1));

    if (family == BenchFamily::Diagonal) {
        std::vector<std::vector<bool>> table(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) table[i][i] = true;
        FormalContext sub(objects, attributes, table);
        std::vector<ObjectSet> tree;
        for (std::size_t i = 0; i < n; ++i) tree.push_back(ObjectSet(n, {i}));
        tree.push_back(sub.all_objects());
        const auto copied = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
        return {sub, tree, "z", sub.row(copied)};
    }

    blocks = std::max<std::size_t>(1, std::min(blocks, n));
    std::vector<std::size_t> block_of(n);
    for (std::size_t i = 0; i < n; ++i) block_of[i] = i * blocks / n;
    for (std::size_t b = 0; b < blocks; ++b) attributes.push_back("b" + std::to_string(b + 1));
    std::vector<std::vector<bool>> table(n, std::vector<bool>(n + blocks, false));
    for (std::size_t i = 0; i < n; ++i) {
        table[i][i] = true;
        table[i][n + block_of[i]] = true;
    }
    FormalContext sub(objects, attributes, table);
    std::vector<ObjectSet> tree;
    for (std::size_t i = 0; i < n; ++i) tree.push_back(ObjectSet(n, {i}));
    for (std::size_t b = 0; b < blocks; ++b) {
        ObjectSet block(n);
        for (std::size_t i = 0; i < n; ++i)
            if (block_of[i] == b) block.set(i);
        if (block.count() > 1 && block.count() < n) tree.push_back(block);
    }
    tree.push_back(sub.all_objects());
    const auto chosen = std::uniform_int_distribution<std::size_t>(0, blocks - 1)(rng);
    AttributeSet row(n + blocks);
    row.set(n + chosen);
    return {sub, make_tree(tree).members, "z", row};
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const auto k = static_cast<double>(xs.size());
    if (xs.size() < 2 || xs.size() != ys.size()) return 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = std::log(xs[i]), y = std::log(ys[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = k * sxx - sx * sx;
    return denom == 0 ? 0 : (k * sxy - sx * sy) / denom;
}

BenchReport run_bench(BenchFamily family, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      std::size_t blocks, std::size_t scratch_max_extents) {
    using clock = std::chrono::steady_clock;
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw ValidationError("bench sizes must be strictly ascending");

    BenchReport report{family, {}, 0};
    std::vector<double> xs, ys;
    for (const auto n : sizes) {
        const auto inst = bench_instance(family, n, seed, blocks);
        BenchRow row;
        row.n = n;
        row.tree_size = inst.tree.size();

        ExtendRequest request{inst.sub, inst.tree, inst.new_object, inst.row};
        request.listing = false;
        const auto t0 = clock::now();
        const auto outcome = run_extend(request);
        row.incremental_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        row.sub_closures = outcome.sub_work.closures;
        row.zbox_closures = outcome.zbox_work.closures;
        row.full_closures = outcome.full_work.closures;
        row.incremental_closures = row.sub_closures + row.zbox_closures + row.full_closures;
        row.efficient = outcome.efficient();

        EnumerationLimits limits;
        limits.max_objects = n + 1;
        limits.max_extents = scratch_max_extents;
        WorkCounters scratch;
        const auto t1 = clock::now();
        try {
            const auto lattice = box_extents(outcome.problem.full(), limits, &scratch);
            (void)build_maximal_tree(lattice);
            row.scratch_closures = scratch.closures;
            row.scratch_ms = std::chrono::duration<double, std::milli>(clock::now() - t1).count();
        } catch (const CapacityError&) {
        }

        xs.push_back(static_cast<double>(n));
        ys.push_back(static_cast<double>(row.incremental_closures));
        report.rows.push_back(row);
    }
    report.slope = loglog_slope(xs, ys);
    return report;
}

std::string bench_text(const BenchReport& report, bool timing) {
    std::ostringstream out;
    out << "# boxtree bench " << kFormatVersion << '\n';
    out << "family " << bench_family_name(report.family) << '\n';
    out << "n\ttree\tsub_closures\tzbox_closures\tK_closures\tincremental\tscratch\tefficient";
    if (timing) out << "\tincremental_ms\tscratch_ms";
    out << '\n';
    for (const auto& r : report.rows) {
        out << r.n << '\t' << r.tree_size << '\t' << r.sub_closures << '\t' << r.zbox_closures << '\t'
            << r.full_closures << '\t' << r.incremental_closures << '\t';
        if (r.scratch_closures)
            out << *r.scratch_closures;
        else
            out << "over-capacity";
        out << '\t' << (r.efficient ? "yes" : "no");
        if (timing) {
            out << '\t' << r.incremental_ms << '\t';
            if (r.scratch_closures)
                out << r.scratch_ms;
            else
                out << '-';
        }
        out << '\n';
    }
    char slope[32];
    std::snprintf(slope, sizeof slope, "%.4f", report.slope);
    out << "slope " << slope << '\n';
    return out.str();
}

}  // namespace boxtree
