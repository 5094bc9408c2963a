#include "boxtree/incremental.hpp"

#include <algorithm>
#include <stdexcept>

namespace boxtree {

namespace {

ObjectSet sub_zero(const ExtensionProblem& prob) {
    // Without a degenerate flag the closure of the empty set is empty.
    if (!prob.sub_partition().degenerate) return prob.sub().no_objects();
    return closure(prob.sub(), prob.sub().no_objects());
}

std::string show(const FormalContext& ctx, const ObjectSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ',';
        out += ctx.object_name(i);
        first = false;
    });
    return out + "}";
}

}  // namespace

ExtensionProblem::ExtensionProblem(FormalContext full, std::size_t z, FormalContext sub)
    : full_(std::move(full)), z_(z), sub_(std::move(sub)) {}

ExtensionProblem ExtensionProblem::split_at(const FormalContext& full, std::size_t z, WorkCounters* sub_work,
                                            WorkCounters* zbox_work) {
    if (z >= full.object_count()) throw DimensionError("object index " + std::to_string(z) + " out of range");
    auto keep = full.all_objects();
    keep.reset(z);
    ExtensionProblem prob(full, z, subcontext(full, keep));
    prob.locate_z_box(sub_work, zbox_work);
    return prob;
}

ExtensionProblem ExtensionProblem::append(const FormalContext& sub, const std::string& name, const AttributeSet& row,
                                          WorkCounters* sub_work, WorkCounters* zbox_work) {
    if (sub.object_count() == 0) throw EmptySubcontextError("cannot extend an empty context");
    ExtensionProblem prob(with_object(sub, name, row), sub.object_count(), sub);
    prob.locate_z_box(sub_work, zbox_work);
    return prob;
}

void ExtensionProblem::locate_z_box(WorkCounters* sub_work, WorkCounters* zbox_work) {
    sub_partition_ = finest_extent_partition(sub_, sub_work);
    // Each finest block of K_H sits inside one finest block of K, so merging
    // and closing them together with {z} inside K reaches the finest
    // partition of K without touching any other extent of K.
    std::vector<ObjectSet> seeds;
    seeds.reserve(sub_partition_.blocks.size() + 1);
    for (const auto& block : sub_partition_.blocks) seeds.push_back(lift(block));
    seeds.push_back(ObjectSet(full_.object_count(), {z_}));
    auto finest = merge_close_fixpoint(full_, std::move(seeds), zbox_work);
    z_box_ = finest.block_containing(z_);
    z_box_rest_ = restrict(z_box_);
}

ObjectSet ExtensionProblem::lift(const ObjectSet& over_h) const {
    check_dimension(sub_, over_h);
    ObjectSet out(full_.object_count());
    over_h.for_each([&](std::size_t h) { out.set(to_g(h)); });
    return out;
}

ObjectSet ExtensionProblem::lift_with_z(const ObjectSet& over_h) const { return lift(over_h).set(z_); }

ObjectSet ExtensionProblem::restrict(const ObjectSet& over_g) const {
    check_dimension(full_, over_g);
    ObjectSet out(sub_.object_count());
    over_g.for_each([&](std::size_t g) {
        if (g != z_) out.set(g < z_ ? g : g - 1);
    });
    return out;
}

const char* fate_name(Fate f) {
    switch (f) {
        case Fate::Survives: return "survives";
        case Fate::Extends: return "extends";
        case Fate::Drops: return "drops";
    }
    return "?";
}

const char* witness_name(Witness w) {
    switch (w) {
        case Witness::ZboxMeetClosure: return "zbox&closure";
        case Witness::ClosureWithZ: return "closure_with_z";
        case Witness::ZboxMeetMember: return "zbox&member";
    }
    return "?";
}

FateRecord fate(const ExtensionProblem& prob, const ObjectSet& member, WorkCounters* full_work) {
    check_dimension(prob.sub(), member);
    if (!is_box_extent(prob.sub(), prob.sub_partition(), member))
        throw NotABoxExtentError(show(prob.sub(), member) + " is not a box extent of the subcontext");

    const auto& zbox = prob.z_box();
    const auto lifted = prob.lift(member);
    auto extends_test = [&]() {
        auto with_z = prob.lift_with_z(member);
        auto closed = closure(prob.full(), with_z, full_work);
        return FateRecord{member, closed == with_z ? Fate::Extends : Fate::Drops, closed, Witness::ClosureWithZ};
    };

    if (!prob.nonstandard()) {
        // z_box \ {z} is nonempty here, so containing it rules out survival.
        if (prob.z_box_rest().is_subset_of(member)) return extends_test();
        if (member.intersects(prob.z_box_rest())) return FateRecord{member, Fate::Drops, zbox & lifted, Witness::ZboxMeetMember};
        auto closed = closure(prob.full(), lifted, full_work);
        auto meet = zbox & closed;
        return FateRecord{member, meet.empty() ? Fate::Survives : Fate::Drops, meet, Witness::ZboxMeetClosure};
    }
    auto closed = closure(prob.full(), lifted, full_work);
    auto meet = zbox & closed;
    if (meet.empty()) return FateRecord{member, Fate::Survives, meet, Witness::ZboxMeetClosure};
    return extends_test();
}

void require_sub_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree) {
    const auto zero = sub_zero(prob);
    const auto& sub = prob.sub();
    bool has_top = false;
    for (const auto& m : tree) {
        if (m.universe() != sub.object_count()) throw NotATreeError("tree member over the wrong object universe");
        if (m == zero) throw NotATreeError("tree contains the lattice zero " + show(sub, m));
        if (!is_box_extent(sub, prob.sub_partition(), m))
            throw NotATreeError(show(sub, m) + " is not a box extent of the subcontext");
        if (m == sub.all_objects()) has_top = true;
    }
    if (!has_top) throw NotATreeError("tree does not contain the full object set");
    for (std::size_t i = 0; i < tree.size(); ++i)
        for (std::size_t j = i + 1; j < tree.size(); ++j)
            if (!tree[i].comparable_with(tree[j]) && (tree[i] & tree[j]) != zero)
                throw NotATreeError(show(sub, tree[i]) + " and " + show(sub, tree[j]) +
                                    " are neither comparable nor disjoint");
}

TreeSplit split_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree, WorkCounters* full_work) {
    if (prob.nonstandard())
        throw NonstandardProblemError("the new object's smallest box extent is a singleton");
    require_sub_tree(prob, tree);
    auto members = tree;
    canonicalize(members);

    TreeSplit out;
    for (const auto& m : members) {
        auto record = fate(prob, m, full_work);
        if (record.fate == Fate::Survives) out.ideal_part.push_back(m);
        if (record.fate == Fate::Extends) out.chain_part.push_back(m);
        out.fates.push_back(std::move(record));
    }

    for (const auto& e : out.ideal_part)
        for (const auto& f : members)
            if (f.is_subset_of(e) && !std::binary_search(out.ideal_part.begin(), out.ideal_part.end(), f, CanonicalLess{}))
                throw std::logic_error("split_tree: surviving part is not an order ideal");
    for (std::size_t i = 0; i + 1 < out.chain_part.size(); ++i)
        if (!out.chain_part[i].is_proper_subset_of(out.chain_part[i + 1]))
            throw std::logic_error("split_tree: extending part is not a chain");
    return out;
}

Extension extend_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree, bool with_atom,
                      WorkCounters* full_work) {
    Extension out;
    out.split = split_tree(prob, tree, full_work);
    std::vector<ObjectSet> members;
    for (const auto& e : out.split.ideal_part) members.push_back(prob.lift(e));
    for (const auto& e : out.split.chain_part) members.push_back(prob.lift_with_z(e));
    if (with_atom) members.push_back(prob.z_box());
    out.tree = make_tree(std::move(members));
    return out;
}

Extension extend_tree_general(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree,
                              WorkCounters* full_work) {
    require_sub_tree(prob, tree);
    auto members = tree;
    canonicalize(members);

    Extension out;
    std::vector<ObjectSet> candidates;
    for (const auto& m : members) {
        auto record = fate(prob, m, full_work);
        if (record.fate == Fate::Survives) {
            out.split.ideal_part.push_back(m);
            candidates.push_back(prob.lift(m));
        } else if (record.fate == Fate::Extends) {
            out.split.chain_part.push_back(m);
            candidates.push_back(prob.lift_with_z(m));
        }
        out.split.fates.push_back(std::move(record));
    }
    canonicalize(candidates);

    const auto zero = closure(prob.full(), prob.full().no_objects(), full_work);
    std::vector<ObjectSet> accepted;
    auto admit = [&](const ObjectSet& e) {
        if (e == zero || std::find(accepted.begin(), accepted.end(), e) != accepted.end()) return true;
        for (const auto& a : accepted)
            if (!a.comparable_with(e) && (a & e) != zero) return false;
        accepted.push_back(e);
        return true;
    };
    admit(prob.full().all_objects());
    admit(prob.z_box());
    for (const auto& c : candidates)
        if (!admit(c)) out.diagnostics.push_back("repair dropped " + show(prob.full(), c));
    out.tree = make_tree(std::move(accepted));
    return out;
}

ClassificationTree restrict_tree(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree_over_g) {
    const auto& full = prob.full();
    bool has_top = false;
    for (const auto& e : tree_over_g) {
        check_dimension(full, e);
        if (e == full.all_objects()) has_top = true;
    }
    if (!has_top) throw NotATreeError("restrict_tree: tree does not contain the full object set");
    for (std::size_t i = 0; i < tree_over_g.size(); ++i)
        for (std::size_t j = i + 1; j < tree_over_g.size(); ++j)
            if (!tree_over_g[i].comparable_with(tree_over_g[j]) && tree_over_g[i].intersects(tree_over_g[j]))
                throw NotATreeError("restrict_tree: members overlap without nesting");

    const auto zero = sub_zero(prob);
    std::vector<ObjectSet> out;
    for (const auto& e : tree_over_g) {
        auto r = prob.restrict(e);
        if (!r.empty() && r != zero) out.push_back(std::move(r));
    }
    return make_tree(std::move(out));
}

RoundTrip round_trip(const ExtensionProblem& prob, const std::vector<ObjectSet>& tree_over_g,
                     const EnumerationLimits& limits) {
    if (prob.nonstandard())
        throw NonstandardProblemError("the new object's smallest box extent is a singleton");
    RoundTrip out;
    // One-extent K: G is both zero and top and nothing can be restricted or
    // extended, so the tree comes back unchanged.
    if (closure(prob.full(), prob.full().no_objects()) == prob.full().all_objects()) {
        out.rebuilt = out.completed = out.rebuilt_from_completed = make_tree(tree_over_g);
        for (const auto& e : out.rebuilt.members) out.restricted.members.push_back(prob.restrict(e));
        return out;
    }
    out.restricted = restrict_tree(prob, tree_over_g);
    out.rebuilt = extend_tree(prob, out.restricted.members, false).tree;

    const auto sub_lattice = box_extents(prob.sub(), limits);
    auto order = sub_lattice.nonzero_elements();
    std::stable_sort(order.begin(), order.end(),
                     [](const ObjectSet& a, const ObjectSet& b) { return a.count() > b.count(); });
    auto members = out.restricted.members;
    for (const auto& e : order) {
        if (std::find(members.begin(), members.end(), e) != members.end()) continue;
        bool fits = std::all_of(members.begin(), members.end(), [&](const ObjectSet& t) {
            return t.comparable_with(e) || (t & e) == sub_lattice.zero();
        });
        if (fits) members.push_back(e);
    }
    out.completed = make_tree(std::move(members));
    out.rebuilt_from_completed = extend_tree(prob, out.completed.members, false).tree;
    return out;
}

ListaFaResult lista_fa(const std::vector<ObjectSet>& ds, const ExtensionProblem& prob, ListaMode mode,
                       WorkCounters* full_work) {
    ListaFaResult out;
    out.mode = mode;
    const auto& z_rest = prob.z_box_rest();
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& row = ds[i];
        if (row.universe() != prob.sub().object_count())
            throw DimensionError("DS row " + std::to_string(i + 1) + " has " + std::to_string(row.universe()) +
                                 " columns, expected " + std::to_string(prob.sub().object_count()));
        ListaRow r;
        r.row = i + 1;
        r.set = row;

        // Containment scan in H coordinates, z column appended, closed in K.
        if (z_rest.is_subset_of(row)) {
            auto with_z = prob.lift_with_z(row);
            r.faithful_in_s = closure(prob.full(), with_z, full_work) == with_z;
        }
        r.faithful_in_f = row.is_subset_of(z_rest);

        auto record = fate(prob, row, full_work);
        r.normative_in_f = record.fate == Fate::Survives;
        r.normative_in_s = record.fate == Fate::Extends;

        const bool use_faithful = mode == ListaMode::Faithful;
        if (use_faithful ? r.faithful_in_s : r.normative_in_s) out.s.push_back(prob.lift_with_z(row));
        if (use_faithful ? r.faithful_in_f : r.normative_in_f) out.f.push_back(row);
        if (r.faithful_in_f != r.normative_in_f || r.faithful_in_s != r.normative_in_s) out.deviations.push_back(r);
        out.rows.push_back(std::move(r));
    }
    return out;
}

}  // namespace boxtree
