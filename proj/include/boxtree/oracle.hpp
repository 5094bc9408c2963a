#pragma once

// Brute-force reference implementations, exponential by construction. Only the
// FormalContext cross table and ObjectSet storage come from the library; no
// derivation, closure, partition or tree code is shared with it.

#include "boxtree/context.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace boxtree::oracle {

using Mask = std::uint64_t;

struct Mismatch {
    std::string digest;
    std::string expected;
    std::string actual;
};

struct OracleReport {
    std::string subject;
    std::uint64_t instances = 0;
    /// Instances outside the hypotheses of the property under test.
    std::uint64_t skipped = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    void merge(const OracleReport& other);
    /// "oracle <subject> instances=N skipped=S mismatches=K" followed by one
    /// "mismatch ..." line per recorded mismatch (at most `max_lines`).
    std::string to_text(std::size_t max_lines = 20) const;
};

/// Stable text key for a context: "<|G|>x<|M|>:" followed by the rows as 0/1.
std::string digest(const FormalContext& ctx);

Mask closure_mask(const FormalContext& ctx, Mask objects);
bool is_extent_mask(const FormalContext& ctx, Mask objects);

/// Every closed subset of G, by scanning all 2^|G| subsets. |G| <= 20.
std::vector<ObjectSet> extents_by_definition(const FormalContext& ctx);

/// Every set partition of G whose blocks are all extents, finest first.
/// CapacityError above 10 objects.
std::vector<std::vector<ObjectSet>> all_extent_partitions(const FormalContext& ctx);

/// Common refinement of all extent partitions.
std::vector<ObjectSet> finest_partition_by_definition(const FormalContext& ctx);

/// Union of the blocks of all extent partitions, plus the closure of the
/// empty set. Canonical order.
std::vector<ObjectSet> box_extents_by_definition(const FormalContext& ctx);

/// Literal scan: for every nonzero element x of `elements`, the members of
/// `family` containing x are nonempty and pairwise nested. False when the
/// family holds `zero` or a set outside `elements`.
bool tree_check_by_definition(const std::vector<ObjectSet>& elements, const ObjectSet& zero,
                              const std::vector<ObjectSet>& family);

/// Maximal classification trees by scanning every subfamily of the nonzero
/// elements. CapacityError above 20 nonzero elements.
std::vector<std::vector<ObjectSet>> backtrack_maximal_trees(const std::vector<ObjectSet>& elements,
                                                            const ObjectSet& zero);

/// Contexts for sweeps.
FormalContext context_from_mask(std::size_t objects, std::size_t attributes, Mask cells);
/// All 2^(rows*cols) tables of the given shape.
std::vector<FormalContext> exhaustive_contexts(std::size_t objects, std::size_t attributes);
/// Seeded random contexts, sizes in [2, max_dim], density cycling through
/// 0.2/0.5/0.8; tables with an empty row or column are redrawn.
std::vector<FormalContext> random_contexts(std::uint64_t seed, std::size_t count, std::size_t max_dim);

}  // namespace boxtree::oracle
