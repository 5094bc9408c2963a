#pragma once

// Cores behind the extend and bench verbs, kept out of the CLI so tests and
// the acceptance binary drive exactly the code the command line runs.

#include "boxtree/incremental.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace boxtree {

struct ExtendRequest {
    FormalContext sub;
    std::vector<ObjectSet> tree;  // over H
    std::string new_object;
    AttributeSet row;
    ListaMode mode = ListaMode::Normative;
    bool with_atom = false;
    bool allow_repair = false;
    bool listing = true;  // run lista_fa over B(K_H) too
};

struct ExtendOutcome {
    ExtensionProblem problem;
    Extension extension;
    bool repaired = false;
    std::optional<ListaFaResult> listing;

    WorkCounters sub_work;      // K_H: finest partition, listing rows
    WorkCounters zbox_work;     // locating z's smallest box extent in K
    WorkCounters full_work;     // fates: closures in K
    WorkCounters listing_work;  // lista_fa closures in K

    /// Closures in K allowed for the fates: |T| + 1.
    std::uint64_t closure_budget = 0;
    /// full_work within budget, and neither full_work nor zbox_work built a
    /// lattice or enumerated extents of K.
    bool efficient() const;
};

/// Runs the incremental update. NonstandardProblemError when z's smallest box
/// extent is {z} and `allow_repair` is off.
ExtendOutcome run_extend(const ExtendRequest& request, const EnumerationLimits& limits = {});

/// Parses a 0/1 row ("10", also "1,0" or "1 0"). DimensionError when the
/// length differs from |M|, ParseError on other characters.
AttributeSet parse_row(const FormalContext& ctx, const std::string& bits);

/// Text report: tree, optional z box, fate table, listing (faithful mode),
/// efficiency line, repair diagnostics.
std::string extend_report(const ExtendOutcome& outcome, bool with_atom);

enum class BenchFamily { Diagonal, Blocked };
const char* bench_family_name(BenchFamily f);

/// A synthetic extension problem of size n (objects of K_H) with a known tree.
///   Diagonal: n x n identity; z copies the row of a seeded object; the tree is
///             the singletons plus H.
///   Blocked:  n objects in `blocks` near-equal blocks; attributes are one per
///             object plus one per block; z carries only a seeded block's
///             attribute; the tree is singletons, blocks and H.
struct BenchInstance {
    FormalContext sub;
    std::vector<ObjectSet> tree;
    std::string new_object;
    AttributeSet row;
};
BenchInstance bench_instance(BenchFamily family, std::size_t n, std::uint64_t seed, std::size_t blocks = 4);

struct BenchRow {
    std::size_t n = 0;
    std::size_t tree_size = 0;
    std::uint64_t sub_closures = 0;
    std::uint64_t zbox_closures = 0;
    std::uint64_t full_closures = 0;
    std::uint64_t incremental_closures = 0;  // sum of the three above
    bool efficient = false;
    /// From-scratch box_extents(K) + build_maximal_tree; empty past the
    /// enumeration guard.
    std::optional<std::uint64_t> scratch_closures;
    double incremental_ms = 0;
    double scratch_ms = 0;
};

struct BenchReport {
    BenchFamily family;
    std::vector<BenchRow> rows;
    /// Least-squares slope of log(incremental_closures) against log(n).
    double slope = 0;
};

BenchReport run_bench(BenchFamily family, const std::vector<std::size_t>& sizes, std::uint64_t seed,
                      std::size_t blocks = 4, std::size_t scratch_max_extents = std::size_t{1} << 18);
/// Timing columns only with `timing`; without them the output is reproducible.
std::string bench_text(const BenchReport& report, bool timing);

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace boxtree
