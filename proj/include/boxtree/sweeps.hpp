#pragma once

// Library-versus-oracle sweeps over a corpus of small contexts. Each sweep
// returns one OracleReport; instances are independent and may be spread over
// OpenMP threads, with results merged in corpus order.

#include "boxtree/oracle.hpp"

#include <cstdint>
#include <vector>

namespace boxtree::verify {

/// All 512 3x3 tables followed by `random_count` seeded random contexts of
/// size 2..max_dim on both sides.
std::vector<FormalContext> standard_corpus(std::uint64_t seed = 20240611, std::size_t random_count = 500,
                                           std::size_t max_dim = 8);

struct SweepOptions {
    Execution execution = Execution::Parallel;
    /// Trees of B(K_H) (and of B(K) for the round trip) are enumerated
    /// exhaustively up to this many objects of G; larger contexts use the
    /// greedy maximal tree and the atoms-plus-top tree.
    std::size_t exhaustive_objects = 6;
    /// Objects up to which the round trip also searches B(K_H) for a maximal
    /// tree whose extension is T_G.
    std::size_t maximal_preimage_objects = 5;
    /// Lattices up to this many box extents get the family-by-family scan.
    std::size_t family_scan_lattice = 12;
};

/// box_extents / is_box_extent / enumerate_extents / finest partition against
/// their definitions.
oracle::OracleReport sweep_box_extents(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// Fate of every box extent of every one-object subcontext against the two
/// set conditions, plus z's smallest box extent and the restriction of box
/// extents to H.
oracle::OracleReport sweep_fates(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// split_tree / extend_tree over trees of B(K_H), checked against B(K) built
/// by definition, including the closure budget and atom coverage. Singleton
/// z boxes go through extend_tree_general.
oracle::OracleReport sweep_tree_extension(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// restrict-then-extend returns every maximal tree of B(K) unchanged.
oracle::OracleReport sweep_round_trip(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// Maximal tree <-> CD-base with zero, complete tree in Ext <-> tree of B
/// with complete orthogonal antichains, and maximal tree in B <-> maximal
/// complete tree in Ext, on every candidate family of small lattices.
oracle::OracleReport sweep_tree_equivalences(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// Normative listing equals the split/extend result on the same trees.
oracle::OracleReport sweep_listing(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

/// Independent witness for the extend efficiency claim: runs the extend core
/// on every standard instance and checks its counters.
oracle::OracleReport sweep_extend_counters(const std::vector<FormalContext>& corpus, const SweepOptions& opt = {});

}  // namespace boxtree::verify
