#include "boxtree/class_tree.hpp"

#include <algorithm>

namespace boxtree {

namespace {

// The members above any member must form a chain, so inclusion is a forest.
// Incomparable members may still share objects (a nonempty lattice zero).
void require_forest(const std::vector<ObjectSet>& family, const char* op) {
    for (const auto& e : family)
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (e.is_subset_of(family[i]) && e.is_subset_of(family[j]) &&
                    !family[i].comparable_with(family[j]))
                    throw NotATreeError(std::string(op) + ": members above one member are not nested");
}

bool compatible(const BoxLattice& lat, const ObjectSet& a, const ObjectSet& b) {
    return a.comparable_with(b) || (a & b) == lat.zero();
}

using Cut = std::vector<std::size_t>;

std::vector<Cut> cuts_below(std::size_t v, const std::vector<std::vector<std::size_t>>& children);

std::vector<Cut> product_of_cuts(const std::vector<std::size_t>& roots,
                                 const std::vector<std::vector<std::size_t>>& children) {
    std::vector<Cut> acc{Cut{}};
    for (auto r : roots) {
        auto options = cuts_below(r, children);
        std::vector<Cut> next;
        next.reserve(acc.size() * options.size());
        for (const auto& partial : acc) {
            for (const auto& option : options) {
                auto combined = partial;
                combined.insert(combined.end(), option.begin(), option.end());
                next.push_back(std::move(combined));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<Cut> cuts_below(std::size_t v, const std::vector<std::vector<std::size_t>>& children) {
    std::vector<Cut> out{Cut{v}};
    if (!children[v].empty()) {
        auto deeper = product_of_cuts(children[v], children);
        out.insert(out.end(), deeper.begin(), deeper.end());
    }
    return out;
}

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Bron-Kerbosch with pivoting over the compatibility graph.
void bron_kerbosch(const std::vector<Bits>& adjacent, Bits& chosen, Bits candidates, Bits excluded,
                   std::vector<Bits>& out) {
    if (candidates.none() && excluded.none()) {
        out.push_back(chosen);
        return;
    }
    auto pool = candidates | excluded;
    std::size_t pivot = pool.find_first();
    std::size_t best = 0;
    for (auto u = pool.find_first(); u != Bits::npos; u = pool.find_next(u)) {
        auto degree = (candidates & adjacent[u]).count();
        if (degree >= best) {
            best = degree;
            pivot = u;
        }
    }
    auto branch = candidates - adjacent[pivot];
    for (auto v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
        chosen.set(v);
        bron_kerbosch(adjacent, chosen, candidates & adjacent[v], excluded & adjacent[v], out);
        chosen.reset(v);
        candidates.reset(v);
        excluded.set(v);
    }
}

}  // namespace

bool ClassificationTree::contains(const ObjectSet& e) const {
    return std::binary_search(members.begin(), members.end(), e, CanonicalLess{});
}

ClassificationTree make_tree(std::vector<ObjectSet> members) {
    canonicalize(members);
    return ClassificationTree{std::move(members)};
}

bool is_cd_independent(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    for (const auto& e : family) lat.require(e);
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!compatible(lat, family[i], family[j])) return false;
    return true;
}

bool is_cd_base(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    if (!is_cd_independent(lat, family)) return false;
    for (const auto& e : lat.elements()) {
        if (std::find(family.begin(), family.end(), e) != family.end()) continue;
        bool fits = std::all_of(family.begin(), family.end(), [&](const ObjectSet& t) { return compatible(lat, e, t); });
        if (fits) return false;
    }
    return true;
}

Verdict is_classification_tree(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    for (const auto& t : family) {
        if (t == lat.zero()) throw ZeroInTreeError("the lattice zero cannot be a tree member");
        lat.require(t);
    }
    for (const auto& x : lat.elements()) {
        if (x == lat.zero()) continue;
        std::vector<const ObjectSet*> above;
        for (const auto& t : family)
            if (x.is_subset_of(t)) above.push_back(&t);
        if (above.empty()) return Verdict::fail("no member contains this element", x);
        for (std::size_t i = 0; i < above.size(); ++i)
            for (std::size_t j = i + 1; j < above.size(); ++j)
                if (!above[i]->comparable_with(*above[j]))
                    return Verdict::fail("members above this element are not a chain", x);
    }
    return Verdict::pass();
}

bool is_maximal_tree(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    if (!is_classification_tree(lat, family)) throw NotATreeError("is_maximal_tree: family is not a classification tree");
    for (const auto& e : lat.elements()) {
        if (e == lat.zero() || std::find(family.begin(), family.end(), e) != family.end()) continue;
        auto extended = family;
        extended.push_back(e);
        if (is_classification_tree(lat, extended)) return false;
    }
    return true;
}

bool is_orthogonal_system(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    if (family.empty()) return false;
    for (const auto& e : family) {
        lat.require(e);
        if (e == lat.zero()) return false;
    }
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if ((family[i] & family[j]) != lat.zero() || family[i] == family[j]) return false;
    return true;
}

bool is_complete_orthogonal_system(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    if (!is_orthogonal_system(lat, family)) return false;
    return std::all_of(lat.atoms().begin(), lat.atoms().end(), [&](const ObjectSet& atom) {
        return std::any_of(family.begin(), family.end(), [&](const ObjectSet& m) { return atom.is_subset_of(m); });
    });
}

std::vector<std::size_t> tree_parents(const std::vector<ObjectSet>& tree) {
    std::vector<std::size_t> parent(tree.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < tree.size(); ++i) {
        for (std::size_t j = 0; j < tree.size(); ++j) {
            if (!tree[i].is_proper_subset_of(tree[j])) continue;
            if (parent[i] == static_cast<std::size_t>(-1) || tree[j].count() < tree[parent[i]].count()) parent[i] = j;
        }
    }
    return parent;
}

std::vector<std::vector<ObjectSet>> maximal_antichains(const std::vector<ObjectSet>& tree) {
    require_forest(tree, "maximal_antichains");
    auto members = tree;
    canonicalize(members);
    const auto parent = tree_parents(members);
    std::vector<std::vector<std::size_t>> children(members.size());
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (parent[i] == static_cast<std::size_t>(-1))
            roots.push_back(i);
        else
            children[parent[i]].push_back(i);
    }
    std::vector<std::vector<ObjectSet>> out;
    if (members.empty()) return out;
    for (const auto& cut : product_of_cuts(roots, children)) {
        std::vector<ObjectSet> antichain;
        for (auto i : cut) antichain.push_back(members[i]);
        canonicalize(antichain);
        out.push_back(std::move(antichain));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return family_less(a, b); });
    return out;
}

bool is_complete_classification_tree(const FormalContext& ctx, const std::vector<ObjectSet>& family,
                                     const EnumerationLimits& limits) {
    return is_complete_classification_tree(ctx, enumerate_extents(ctx, limits), family);
}

bool is_complete_classification_tree(const FormalContext& ctx, const std::vector<ObjectSet>& extents,
                                     const std::vector<ObjectSet>& family) {
    if (family.empty()) return false;
    const auto& zero = extents.front();
    for (const auto& t : family) {
        if (t == zero) return false;
        if (!std::binary_search(extents.begin(), extents.end(), t, CanonicalLess{})) return false;
    }
    for (const auto& x : extents) {
        if (x == zero) continue;
        std::vector<const ObjectSet*> above;
        for (const auto& t : family)
            if (x.is_subset_of(t)) above.push_back(&t);
        if (above.empty()) return false;
        for (std::size_t i = 0; i < above.size(); ++i)
            for (std::size_t j = i + 1; j < above.size(); ++j)
                if (!above[i]->comparable_with(*above[j])) return false;
    }
    const auto all = ctx.all_objects();
    for (const auto& antichain : maximal_antichains(family)) {
        auto covered = ctx.no_objects();
        for (const auto& e : antichain) covered |= e;
        if (covered != all) return false;
    }
    return true;
}

bool is_complete_tree_in_box_lattice(const BoxLattice& lat, const std::vector<ObjectSet>& family) {
    if (family.empty()) return false;
    for (const auto& t : family)
        if (!lat.contains(t) || t == lat.zero()) return false;
    if (!is_classification_tree(lat, family)) return false;
    for (const auto& antichain : maximal_antichains(family))
        if (!is_complete_orthogonal_system(lat, antichain)) return false;
    return true;
}

std::vector<OrthogonalSystem> decompose_levels(const std::vector<ObjectSet>& tree) {
    require_forest(tree, "decompose_levels");
    auto remaining = tree;
    canonicalize(remaining);
    std::vector<OrthogonalSystem> levels;
    while (!remaining.empty()) {
        OrthogonalSystem level;
        std::vector<ObjectSet> rest;
        for (const auto& e : remaining) {
            bool covered = std::any_of(remaining.begin(), remaining.end(),
                                       [&](const ObjectSet& f) { return e.is_proper_subset_of(f); });
            (covered ? rest : level).push_back(e);
        }
        levels.push_back(std::move(level));
        remaining = std::move(rest);
    }
    std::reverse(levels.begin(), levels.end());
    return levels;
}

ClassificationTree build_maximal_tree(const BoxLattice& lat, TreeStrategy) {
    auto order = lat.nonzero_elements();
    std::stable_sort(order.begin(), order.end(), [](const ObjectSet& a, const ObjectSet& b) {
        if (a.count() != b.count()) return a.count() > b.count();
        return canonical_less(a, b);
    });
    std::vector<ObjectSet> accepted;
    for (const auto& e : order) {
        bool fits = std::all_of(accepted.begin(), accepted.end(), [&](const ObjectSet& t) { return compatible(lat, e, t); });
        if (fits) accepted.push_back(e);
    }
    return make_tree(std::move(accepted));
}

std::vector<ClassificationTree> enumerate_maximal_trees(const BoxLattice& lat, std::size_t limit,
                                                        const EnumerationLimits& limits) {
    if (lat.size() > limits.max_tree_lattice)
        throw CapacityError("tree enumeration over " + std::to_string(lat.size()) + " lattice elements exceeds " +
                            std::to_string(limits.max_tree_lattice));
    const auto nodes = lat.nonzero_elements();
    const auto n = nodes.size();
    std::vector<Bits> adjacent(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && compatible(lat, nodes[i], nodes[j])) adjacent[i].set(j);

    std::vector<Bits> cliques;
    Bits chosen(n);
    Bits candidates(n);
    candidates.set();
    if (n > 0) bron_kerbosch(adjacent, chosen, candidates, Bits(n), cliques);

    std::vector<ClassificationTree> trees;
    trees.reserve(cliques.size());
    for (const auto& c : cliques) {
        std::vector<ObjectSet> members;
        for (auto i = c.find_first(); i != Bits::npos; i = c.find_next(i)) members.push_back(nodes[i]);
        trees.push_back(make_tree(std::move(members)));
    }
    std::sort(trees.begin(), trees.end(),
              [](const ClassificationTree& a, const ClassificationTree& b) { return family_less(a.members, b.members); });
    if (trees.size() > limit) trees.resize(limit);
    return trees;
}

}  // namespace boxtree
