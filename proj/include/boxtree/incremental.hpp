#pragma once

#include "boxtree/class_tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace boxtree {

/// A context K over G together with its one-object restriction K_H, H = G \ {z}.
///
/// Sets "over H" use the subcontext's object indices; sets "over G" use the
/// full context's. lift()/restrict() translate between the two.
class ExtensionProblem {
public:
    /// Splits `full` at object `z`. Box work in K_H lands in `sub_work`, the
    /// closures spent finding z's smallest box extent in `zbox_work`.
    static ExtensionProblem split_at(const FormalContext& full, std::size_t z, WorkCounters* sub_work = nullptr,
                                     WorkCounters* zbox_work = nullptr);
    /// Appends a new object to `sub`; z becomes the last index of G.
    static ExtensionProblem append(const FormalContext& sub, const std::string& name, const AttributeSet& row,
                                   WorkCounters* sub_work = nullptr, WorkCounters* zbox_work = nullptr);

    const FormalContext& full() const { return full_; }
    const FormalContext& sub() const { return sub_; }
    std::size_t z() const { return z_; }
    /// z's smallest box extent in K (over G).
    const ObjectSet& z_box() const { return z_box_; }
    /// The same set with z removed, over H.
    const ObjectSet& z_box_rest() const { return z_box_rest_; }
    /// Outside the standard hypothesis: z's smallest box extent is {z} alone.
    bool nonstandard() const { return z_box_.count() == 1; }
    const ExtentPartition& sub_partition() const { return sub_partition_; }

    ObjectSet lift(const ObjectSet& over_h) const;
    ObjectSet lift_with_z(const ObjectSet& over_h) const;
    ObjectSet restrict(const ObjectSet& over_g) const;
    std::size_t to_g(std::size_t h) const { return h < z_ ? h : h + 1; }

private:
    ExtensionProblem(FormalContext full, std::size_t z, FormalContext sub);
    void locate_z_box(WorkCounters* sub_work, WorkCounters* zbox_work);

    FormalContext full_;
    std::size_t z_;
    FormalContext sub_;
    ExtentPartition sub_partition_;
    ObjectSet z_box_;
    ObjectSet z_box_rest_;
};

enum class Fate { Survives, Extends, Drops };
const char* fate_name(Fate f);

/// What FateRecord::witness holds (always over G).
enum class Witness {
    ZboxMeetClosure,  // z_box & E''
    ClosureWithZ,     // (E + z)''
    ZboxMeetMember,   // z_box & E, nonempty, so z_box & E'' is nonempty too
};
const char* witness_name(Witness w);

struct FateRecord {
    ObjectSet member;  // over H
    Fate fate;
    ObjectSet witness;
    Witness witness_kind;
};

/// Classifies a box extent E of K_H. In the standard case at most one closure
/// in K is spent, charged to `full_work`. NotABoxExtentError when E is not a
/// box extent of K_H.
FateRecord fate(const ExtensionProblem& prob, const ObjectSet& member, WorkCounters* full_work = nullptr);

struct TreeSplit {
    std::vector<ObjectSet> ideal_part;  // over H, canonical
    std::vector<ObjectSet> chain_part;  // over H, ascending chain
    std::vector<FateRecord> fates;      // one per member, canonical member order
};

/// Validates T as a classification tree in B(K_H): nonzero box extents,
/// comparable-or-disjoint, containing H. NotATreeError otherwise.
void require_sub_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree);

/// Survivors form an order ideal of T; extenders form a chain. The
/// postconditions are checked and a violation throws std::logic_error.
/// NonstandardProblemError when z_box = {z}.
TreeSplit split_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree, WorkCounters* full_work = nullptr);

struct Extension {
    TreeSplit split;
    ClassificationTree tree;  // over G
    std::vector<std::string> diagnostics;
};

/// T* = survivors + {E + z : E extends}, plus z_box when `with_atom`.
Extension extend_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree, bool with_atom,
                      WorkCounters* full_work = nullptr);

/// Also handles z_box = {z}: applies fates, adds z_box and G, then drops
/// members that break comparable-or-disjoint (canonical order), noting each.
Extension extend_tree_general(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree,
                              WorkCounters* full_work = nullptr);

/// { E & H : E in T } without the empty set and the zero of B(K_H).
ClassificationTree restrict_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree_over_g);

struct RoundTrip {
    ClassificationTree restricted;              // over H
    ClassificationTree rebuilt;                 // extend_tree(restricted), over G
    ClassificationTree completed;               // a maximal tree of B(K_H) containing `restricted`
    ClassificationTree rebuilt_from_completed;  // over G
};

/// Restricts then extends; also completes the restriction to a maximal tree
/// in B(K_H) and extends that. NonstandardProblemError when z_box = {z}. A one-extent K
/// returns the tree unchanged.
RoundTrip round_trip(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree_over_g,
                     const EnumerationLimits& limits = {});

enum class ListaMode { Faithful, Normative };

struct ListaRow {
    std::size_t row;       // 1-based position in DS
    ObjectSet set;         // over H
    bool faithful_in_f = false;
    bool normative_in_f = false;
    bool faithful_in_s = false;
    bool normative_in_s = false;
};

struct ListaFaResult {
    ListaMode mode;
    std::vector<ObjectSet> s;  // over G, DS order
    std::vector<ObjectSet> f;  // over H, DS order
    std::vector<ListaRow> rows;
    /// Rows where the two modes put the row in different places.
    std::vector<ListaRow> deviations;
};

/// Port of the tree-update listing over the rows DS (box extents of K_H).
/// Faithful: S = rows containing z_box & H that stay closed in K once z is
/// appended; F = rows contained in z_box & H. Normative: F = survivors,
/// S = extenders with z appended. Both are computed; `mode` picks s/f.
ListaFaResult lista_fa(const std::vector<ObjectSet>& ds, const ExtensionProblem& prob, ListaMode mode,
                       WorkCounters* full_work = nullptr);

}  // namespace boxtree
