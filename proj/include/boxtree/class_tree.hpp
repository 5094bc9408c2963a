#pragma once

#include "boxtree/box_lattice.hpp"

#include <vector>

namespace boxtree {

/// A zero-free family of box extents, members kept in canonical order.
struct ClassificationTree {
    std::vector<ObjectSet> members;

    bool contains(const ObjectSet& e) const;
    std::size_t size() const { return members.size(); }
    friend bool operator==(const ClassificationTree&, const ClassificationTree&) = default;
};

/// Canonical, duplicate-free copy of a family.
ClassificationTree make_tree(std::vector<ObjectSet> members);

using OrthogonalSystem = std::vector<ObjectSet>;

/// Pairwise comparable or meeting at lat.zero(). NotAnElementError for foreign sets.
bool is_cd_independent(const BoxLattice& lat, const std::vector<ObjectSet>& family);
/// Maximal CD-independent family of the whole lattice (zero included or not).
bool is_cd_base(const BoxLattice& lat, const std::vector<ObjectSet>& family);

/// Every nonzero lattice element has a nonempty chain of members above it.
/// Scans all lattice elements; the witness is the first element that fails.
/// ZeroInTreeError when the family holds lat.zero().
Verdict is_classification_tree(const BoxLattice& lat, const std::vector<ObjectSet>& family);

/// True iff no single nonzero element can be added. NotATreeError otherwise.
bool is_maximal_tree(const BoxLattice& lat, const std::vector<ObjectSet>& family);

bool is_orthogonal_system(const BoxLattice& lat, const std::vector<ObjectSet>& family);
/// Orthogonal and every atom lies below some member.
bool is_complete_orthogonal_system(const BoxLattice& lat, const std::vector<ObjectSet>& family);

/// Maximal antichains of the inclusion order on a tree, canonical order.
/// Members of a classification tree form a rooted forest under inclusion, so
/// a maximal antichain is a cut through every root-to-leaf path.
std::vector<std::vector<ObjectSet>> maximal_antichains(const std::vector<ObjectSet>& tree);

/// Complete classification tree of extents, checked in the extent lattice:
/// a tree there, and every maximal antichain unions to G.
bool is_complete_classification_tree(const FormalContext& ctx, const std::vector<ObjectSet>& family,
                                     const EnumerationLimits& limits = {});
/// Same, against extents already enumerated in canonical order.
bool is_complete_classification_tree(const FormalContext& ctx, const std::vector<ObjectSet>& extents,
                                     const std::vector<ObjectSet>& family);
/// The box-lattice form: members are box extents, a tree in the box lattice,
/// and every maximal antichain is a complete orthogonal system.
bool is_complete_tree_in_box_lattice(const BoxLattice& lat, const std::vector<ObjectSet>& family);

/// Level decomposition into orthogonal systems, lowest level first. Level k
/// is the set of maximal members left after removing the levels above it.
std::vector<OrthogonalSystem> decompose_levels(const std::vector<ObjectSet>& tree);

enum class TreeStrategy { GreedyBySize };

/// Deterministic maximal tree. Returns an empty tree only for a one-element
/// lattice, where no nonzero element exists.
ClassificationTree build_maximal_tree(const BoxLattice& lat, TreeStrategy strategy = TreeStrategy::GreedyBySize);

/// All maximal trees (maximal cliques of the comparable-or-disjoint graph on
/// the nonzero elements), canonical order. CapacityError when the lattice has
/// more than limits.max_tree_lattice elements.
std::vector<ClassificationTree> enumerate_maximal_trees(const BoxLattice& lat, std::size_t limit = SIZE_MAX,
                                                        const EnumerationLimits& limits = {});

/// Parent of each member: the smallest member strictly containing it, or npos.
std::vector<std::size_t> tree_parents(const std::vector<ObjectSet>& tree);

}  // namespace boxtree
