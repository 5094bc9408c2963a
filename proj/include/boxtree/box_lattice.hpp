#pragma once

#include "boxtree/context.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace boxtree {

/// Outcome of a predicate that can point at the element that made it fail.
struct Verdict {
    bool ok = true;
    std::string reason;
    std::optional<ObjectSet> witness;

    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why, std::optional<ObjectSet> witness = std::nullopt) {
        return {false, std::move(why), std::move(witness)};
    }
};

/// A partition of G into extents. When the closure of the empty set is
/// nonempty, {G} is the only extent partition and `degenerate` is set.
struct ExtentPartition {
    std::vector<ObjectSet> blocks;  // canonical order
    std::vector<std::size_t> block_of;  // object index -> block index
    bool degenerate = false;

    const ObjectSet& block_containing(std::size_t g) const { return blocks.at(block_of.at(g)); }
};

struct FlaggedSet {
    ObjectSet set;
    bool degenerate = false;
};

Verdict is_extent_partition(const FormalContext& ctx, const std::vector<ObjectSet>& blocks);

/// The finest extent partition, by merge-and-close from the object closures.
ExtentPartition finest_extent_partition(const FormalContext& ctx, WorkCounters* counters = nullptr);

/// Merge-and-close fixpoint from an arbitrary cover of G by sets that each
/// lie inside one block of the finest partition.
ExtentPartition merge_close_fixpoint(const FormalContext& ctx, std::vector<ObjectSet> seeds,
                                     WorkCounters* counters = nullptr);

/// Smallest box extent containing g (its block in the finest partition).
FlaggedSet smallest_box_extent(const FormalContext& ctx, std::size_t g, WorkCounters* counters = nullptr);

bool is_box_extent(const FormalContext& ctx, const ExtentPartition& finest, const ObjectSet& candidate,
                   WorkCounters* counters = nullptr);
bool is_box_extent(const FormalContext& ctx, const ObjectSet& candidate);

/// The box extents of a context ordered by inclusion. Immutable.
class BoxLattice {
public:
    BoxLattice(std::vector<ObjectSet> elements, ExtentPartition finest, ObjectSet zero);

    const std::vector<ObjectSet>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const ObjectSet& zero() const { return zero_; }
    const ObjectSet& top() const { return elements_.back(); }
    const std::vector<ObjectSet>& atoms() const { return atoms_; }
    const ExtentPartition& finest_partition() const { return finest_; }
    bool degenerate() const { return finest_.degenerate; }
    std::size_t universe() const { return zero_.universe(); }

    bool contains(const ObjectSet& e) const { return index_.count(e) != 0; }
    /// Position in elements(); NotAnElementError when absent.
    std::size_t index_of(const ObjectSet& e) const;
    void require(const ObjectSet& e) const;

    /// Nonzero elements in canonical order.
    std::vector<ObjectSet> nonzero_elements() const;

private:
    std::vector<ObjectSet> elements_;
    ExtentPartition finest_;
    ObjectSet zero_;
    std::vector<ObjectSet> atoms_;
    std::unordered_map<ObjectSet, std::size_t> index_;
};

/// All box extents; bumps counters->lattice_builds. CapacityError past the bound.
BoxLattice box_extents(const FormalContext& ctx, const EnumerationLimits& limits = {},
                       WorkCounters* counters = nullptr);

ObjectSet box_meet(const BoxLattice& lat, const ObjectSet& a, const ObjectSet& b);
ObjectSet box_join(const BoxLattice& lat, const ObjectSet& a, const ObjectSet& b);

/// Covering pairs (lower, upper) as indices into elements().
std::vector<std::pair<std::size_t, std::size_t>> cover_relation(const BoxLattice& lat);

}  // namespace boxtree
