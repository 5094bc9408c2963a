// boxtree: box extents, classification trees and one-object tree updates.

#include "boxtree/commands.hpp"
#include "boxtree/format.hpp"
#include "boxtree/sweeps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace boxtree;

namespace {

constexpr int kExitCheckFailed = 4;
constexpr int kExitInternal = 70;

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return 1;
        case ErrorKind::Capacity: return 3;
        case ErrorKind::NonstandardProblem: return 5;
        default: return 2;
    }
}

struct Common {
    std::string context_path;
    bool lenient = false;
    std::string format = "text";
};

FormalContext load(const Common& c) {
    auto loaded = load_context_file(c.context_path, !c.lenient);
    for (const auto& d : loaded.diagnostics) std::cerr << "warning: " << d << '\n';
    return std::move(loaded.context);
}

void add_common(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
    cmd->add_option("context", c.context_path, "Context file (.cxt Burmeister, .csv 0/1 table)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--lenient", c.lenient, "Accept all-false rows and columns, with a warning");
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
}

int cmd_extents(const Common& c) {
    const auto ctx = load(c);
    const auto extents = enumerate_extents(ctx, EnumerationLimits::from_environment());
    if (c.format == "structured") {
        std::cout << "# boxtree extents " << kFormatVersion << '\n';
        for (const auto& e : extents) std::cout << "extent " << format_set(ctx, e) << '\n';
    } else {
        std::cout << listing_text(ctx, extents);
    }
    return 0;
}

int cmd_box(const Common& c) {
    const auto ctx = load(c);
    const auto lat = box_extents(ctx, EnumerationLimits::from_environment());
    if (c.format == "dot")
        std::cout << box_lattice_dot(ctx, lat);
    else if (c.format == "structured")
        std::cout << box_lattice_structured(ctx, lat);
    else
        std::cout << listing_text(ctx, lat.elements());
    return 0;
}

int cmd_partition(const Common& c) {
    const auto ctx = load(c);
    const auto p = finest_extent_partition(ctx);
    if (p.degenerate)
        std::cerr << "warning: the closure of the empty set is " << format_set(ctx, closure(ctx, ctx.no_objects()))
                  << ", so {G} is the only extent partition\n";
    if (c.format == "structured")
        std::cout << partition_structured(ctx, p);
    else
        std::cout << listing_text(ctx, p.blocks);
    return 0;
}

int cmd_tree(const Common& c, bool maximal, const std::string& check_path) {
    const auto ctx = load(c);
    const auto limits = EnumerationLimits::from_environment();
    const auto lat = box_extents(ctx, limits);
    if (maximal) {
        const auto tree = build_maximal_tree(lat);
        std::cout << (c.format == "dot" ? tree_dot(ctx, tree.members) : tree_text(ctx, tree.members));
        return 0;
    }
    const auto family = read_tree_file(ctx, check_path);
    const auto verdict = is_classification_tree(lat, family);
    if (verdict) {
        std::cout << "pass\n";
        return 0;
    }
    std::cout << "fail " << verdict.reason;
    if (verdict.witness) std::cout << " witness x=" << format_set(ctx, *verdict.witness);
    std::cout << '\n';
    return kExitCheckFailed;
}

struct ExtendArgs {
    std::string tree_path;
    std::string new_object;
    std::string row;
    std::string mode = "normative";
    bool with_atom = false;
    bool allow_repair = false;
    std::string tree_out;
};

int cmd_extend(const Common& c, const ExtendArgs& a) {
    const auto sub = load(c);
    ExtendRequest request{sub, read_tree_file(sub, a.tree_path), a.new_object, parse_row(sub, a.row)};
    request.mode = a.mode == "faithful" ? ListaMode::Faithful : ListaMode::Normative;
    request.with_atom = a.with_atom;
    request.allow_repair = a.allow_repair;
    request.listing = request.mode == ListaMode::Faithful;
    const auto outcome = run_extend(request, EnumerationLimits::from_environment());

    if (c.format == "dot")
        std::cout << tree_dot(outcome.problem.full(), outcome.extension.tree.members);
    else
        std::cout << extend_report(outcome, a.with_atom);
    if (!a.tree_out.empty()) {
        std::ofstream out(a.tree_out, std::ios::binary);
        out << tree_text(outcome.problem.full(), outcome.extension.tree.members);
        if (!out) throw std::runtime_error("cannot write '" + a.tree_out + "'");
    }
    if (!outcome.repaired && !outcome.efficient()) {
        std::cerr << "error: extension exceeded its closure budget or built the lattice of the extended context\n";
        return kExitInternal;
    }
    return 0;
}

struct BenchArgs {
    std::string family = "diagonal";
    std::vector<std::size_t> sizes{8, 16, 32, 64};
    std::uint64_t seed = 1;
    std::size_t blocks = 4;
    bool timing = false;
};

int cmd_bench(const BenchArgs& a) {
    const auto family = a.family == "blocked" ? BenchFamily::Blocked : BenchFamily::Diagonal;
    std::cout << bench_text(run_bench(family, a.sizes, a.seed, a.blocks), a.timing);
    return 0;
}

struct SweepArgs {
    std::uint64_t seed = 20240611;
    std::size_t random = 500;
    std::size_t max_dim = 8;
    bool serial = false;
    std::size_t max_lines = 20;
    std::vector<std::string> subjects;
};

int cmd_oracle_sweep(const SweepArgs& a) {
    const auto corpus = verify::standard_corpus(a.seed, a.random, a.max_dim);
    verify::SweepOptions opt;
    opt.execution = a.serial ? Execution::Serial : Execution::Parallel;
    using Sweep = oracle::OracleReport (*)(const std::vector<FormalContext>&, const verify::SweepOptions&);
    const std::vector<std::pair<std::string, Sweep>> all{
        {"box-extents", verify::sweep_box_extents},
        {"fates", verify::sweep_fates},
        {"tree-extension", verify::sweep_tree_extension},
        {"round-trip", verify::sweep_round_trip},
        {"tree-equivalences", verify::sweep_tree_equivalences},
        {"listing", verify::sweep_listing},
        {"extend-counters", verify::sweep_extend_counters},
    };
    bool ok = true;
    for (const auto& [name, sweep] : all) {
        if (!a.subjects.empty() && std::find(a.subjects.begin(), a.subjects.end(), name) == a.subjects.end())
            continue;
        const auto report = sweep(corpus, opt);
        std::cout << report.to_text(a.max_lines);
        ok = ok && report.ok();
    }
    return ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Box extents, classification trees and incremental tree updates for formal contexts"};
    app.require_subcommand(1);

    Common common;
    auto* extents = app.add_subcommand("extents", "List all extents in canonical order");
    add_common(extents, common, {"text", "structured"});
    auto* box = app.add_subcommand("box", "List the box extents");
    add_common(box, common, {"text", "dot", "structured"});
    auto* partition = app.add_subcommand("partition", "Finest extent partition");
    add_common(partition, common, {"text", "structured"});

    auto* tree = app.add_subcommand("tree", "Build a maximal classification tree or check a tree file");
    add_common(tree, common, {"text", "dot"});
    bool maximal = false;
    std::string check_path;
    auto* maximal_flag = tree->add_flag("--maximal", maximal, "Build a maximal tree");
    auto* check_opt = tree->add_option("--check", check_path, "Tree file to verify")->check(CLI::ExistingFile);
    maximal_flag->excludes(check_opt);
    tree->callback([&] {
        if (!maximal && check_path.empty()) throw CLI::ValidationError("tree", "one of --maximal or --check is required");
    });

    auto* extend = app.add_subcommand("extend", "Update a tree of the subcontext after adding one object");
    add_common(extend, common, {"text", "dot"});
    ExtendArgs ea;
    extend->add_option("tree", ea.tree_path, "Tree file over the subcontext")->required()->check(CLI::ExistingFile);
    extend->add_option("--new-object", ea.new_object, "Name of the added object")->required();
    extend->add_option("--row", ea.row, "Attribute row of the added object, e.g. 10")->required();
    extend->add_option("--mode", ea.mode, "Listing mode")->check(CLI::IsMember({"faithful", "normative"}));
    extend->add_flag("--with-atom", ea.with_atom, "Also add the new object's smallest box extent");
    extend->add_flag("--allow-repair", ea.allow_repair, "Handle a singleton box for the new object by repair");
    extend->add_option("--tree-out", ea.tree_out, "Write the extended tree to this file");

    auto* bench = app.add_subcommand("bench", "Closure counts of the incremental update on synthetic families");
    BenchArgs ba;
    bench->add_option("--family", ba.family)->check(CLI::IsMember({"diagonal", "blocked"}));
    bench->add_option("--sizes", ba.sizes, "Ascending sizes")->delimiter(',')->check(CLI::PositiveNumber);
    bench->add_option("--seed", ba.seed);
    bench->add_option("--blocks", ba.blocks)->check(CLI::PositiveNumber);
    bench->add_flag("--timing", ba.timing, "Add wall-clock columns");

    auto* sweep = app.add_subcommand("oracle-sweep", "Compare the library against brute-force oracles");
    SweepArgs sa;
    sweep->add_option("--seed", sa.seed);
    sweep->add_option("--random", sa.random, "Number of random contexts");
    sweep->add_option("--max-dim", sa.max_dim)->check(CLI::Range(2, 8));
    sweep->add_flag("--serial", sa.serial, "Run on one thread");
    sweep->add_option("--subject", sa.subjects, "Restrict to named sweeps");
    sweep->add_option("--max-lines", sa.max_lines, "Mismatch lines printed per sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*extents) return cmd_extents(common);
        if (*box) return cmd_box(common);
        if (*partition) return cmd_partition(common);
        if (*tree) return cmd_tree(common, maximal, check_path);
        if (*extend) return cmd_extend(common, ea);
        if (*bench) return cmd_bench(ba);
        if (*sweep) return cmd_oracle_sweep(sa);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return 0;
}
