#include "boxtree/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace boxtree::oracle {

namespace {

constexpr std::size_t kPartitionCap = 10;
constexpr std::size_t kSubsetCap = 20;
constexpr std::size_t kTreeFamilyCap = 20;

Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

ObjectSet to_set(std::size_t n, Mask m) {
    ObjectSet s(n);
    for (std::size_t i = 0; i < n; ++i)
        if ((m >> i) & 1U) s.set(i);
    return s;
}

Mask to_mask(const ObjectSet& s) {
    Mask m = 0;
    for (std::size_t i = 0; i < s.universe(); ++i)
        if (s.test(i)) m |= Mask{1} << i;
    return m;
}

bool sorted_less(const ObjectSet& a, const ObjectSet& b) {
    // Same order as the library's canonical one, spelled out independently.
    if (a.count() != b.count()) return a.count() < b.count();
    for (std::size_t i = 0; i < a.universe(); ++i)
        if (a.test(i) != b.test(i)) return a.test(i);
    return false;
}

std::vector<ObjectSet> masks_to_sets(std::size_t n, const std::set<Mask>& masks) {
    std::vector<ObjectSet> out;
    for (auto m : masks) out.push_back(to_set(n, m));
    std::sort(out.begin(), out.end(), sorted_less);
    return out;
}

// Restricted growth strings enumerate each set partition exactly once.
template <class F>
void for_each_partition(std::size_t n, F&& visit) {
    std::vector<std::size_t> label(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        std::size_t blocks = n == 0 ? 0 : prefix_max[n - 1] + 1;
        std::vector<Mask> parts(blocks, 0);
        for (std::size_t i = 0; i < n; ++i) parts[label[i]] |= Mask{1} << i;
        visit(parts);
        std::size_t i = n;
        while (i-- > 1) {
            if (label[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0 || n <= 1) return;
        ++label[i];
        prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            label[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

bool nested(const ObjectSet& a, const ObjectSet& b) {
    bool a_in_b = true;
    bool b_in_a = true;
    for (std::size_t i = 0; i < a.universe(); ++i) {
        if (a.test(i) && !b.test(i)) a_in_b = false;
        if (b.test(i) && !a.test(i)) b_in_a = false;
    }
    return a_in_b || b_in_a;
}

bool inside(const ObjectSet& a, const ObjectSet& b) {
    for (std::size_t i = 0; i < a.universe(); ++i)
        if (a.test(i) && !b.test(i)) return false;
    return true;
}

}  // namespace

void OracleReport::merge(const OracleReport& other) {
    instances += other.instances;
    skipped += other.skipped;
    mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

std::string OracleReport::to_text(std::size_t max_lines) const {
    std::ostringstream out;
    out << "oracle " << subject << " instances=" << instances << " skipped=" << skipped << " mismatches=" << mismatches.size() << '\n';
    for (std::size_t i = 0; i < mismatches.size() && i < max_lines; ++i) {
        const auto& m = mismatches[i];
        out << "mismatch " << m.digest << " expected=" << m.expected << " actual=" << m.actual << '\n';
    }
    return out.str();
}

std::string digest(const FormalContext& ctx) {
    std::string out = std::to_string(ctx.object_count()) + "x" + std::to_string(ctx.attribute_count()) + ":";
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        if (g) out += '/';
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out += ctx.incident(g, m) ? '1' : '0';
    }
    return out;
}

Mask closure_mask(const FormalContext& ctx, Mask objects) {
    const auto n = ctx.object_count();
    const auto k = ctx.attribute_count();
    std::vector<bool> shared(k, true);
    for (std::size_t g = 0; g < n; ++g) {
        if (!((objects >> g) & 1U)) continue;
        for (std::size_t m = 0; m < k; ++m)
            if (!ctx.incident(g, m)) shared[m] = false;
    }
    Mask out = 0;
    for (std::size_t g = 0; g < n; ++g) {
        bool has_all = true;
        for (std::size_t m = 0; m < k && has_all; ++m)
            if (shared[m] && !ctx.incident(g, m)) has_all = false;
        if (has_all) out |= Mask{1} << g;
    }
    return out;
}

bool is_extent_mask(const FormalContext& ctx, Mask objects) { return closure_mask(ctx, objects) == objects; }

std::vector<ObjectSet> extents_by_definition(const FormalContext& ctx) {
    const auto n = ctx.object_count();
    if (n > kSubsetCap) throw CapacityError("oracle extent scan over " + std::to_string(n) + " objects");
    std::set<Mask> closed;
    for (Mask m = 0; m <= full_mask(n); ++m) {
        if (is_extent_mask(ctx, m)) closed.insert(m);
        if (m == full_mask(n)) break;
    }
    return masks_to_sets(n, closed);
}

std::vector<std::vector<ObjectSet>> all_extent_partitions(const FormalContext& ctx) {
    const auto n = ctx.object_count();
    if (n > kPartitionCap) throw CapacityError("oracle partition scan over " + std::to_string(n) + " objects");
    std::vector<std::vector<ObjectSet>> out;
    for_each_partition(n, [&](const std::vector<Mask>& parts) {
        for (auto p : parts)
            if (!is_extent_mask(ctx, p)) return;
        std::vector<ObjectSet> blocks;
        for (auto p : parts) blocks.push_back(to_set(n, p));
        std::sort(blocks.begin(), blocks.end(), sorted_less);
        out.push_back(std::move(blocks));
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), sorted_less);
    });
    return out;
}

std::vector<ObjectSet> finest_partition_by_definition(const FormalContext& ctx) {
    const auto n = ctx.object_count();
    const auto partitions = all_extent_partitions(ctx);
    std::set<Mask> blocks;
    for (std::size_t g = 0; g < n; ++g) {
        Mask together = full_mask(n);
        for (const auto& p : partitions)
            for (const auto& b : p)
                if (b.test(g)) together &= to_mask(b);
        blocks.insert(together);
    }
    return masks_to_sets(n, blocks);
}

std::vector<ObjectSet> box_extents_by_definition(const FormalContext& ctx) {
    const auto n = ctx.object_count();
    std::set<Mask> boxes{closure_mask(ctx, 0)};
    for (const auto& p : all_extent_partitions(ctx))
        for (const auto& b : p) boxes.insert(to_mask(b));
    return masks_to_sets(n, boxes);
}

bool tree_check_by_definition(const std::vector<ObjectSet>& elements, const ObjectSet& zero,
                              const std::vector<ObjectSet>& family) {
    for (const auto& t : family) {
        if (t == zero) return false;
        if (std::find(elements.begin(), elements.end(), t) == elements.end()) return false;
    }
    for (const auto& x : elements) {
        if (x == zero) continue;
        std::size_t above = 0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (!inside(x, family[i])) continue;
            ++above;
            for (std::size_t j = 0; j < family.size(); ++j)
                if (inside(x, family[j]) && !nested(family[i], family[j])) return false;
        }
        if (above == 0) return false;
    }
    return true;
}

std::vector<std::vector<ObjectSet>> backtrack_maximal_trees(const std::vector<ObjectSet>& elements,
                                                            const ObjectSet& zero) {
    std::vector<ObjectSet> nonzero;
    for (const auto& e : elements)
        if (e != zero) nonzero.push_back(e);
    const auto k = nonzero.size();
    if (k > kTreeFamilyCap) throw CapacityError("oracle tree scan over " + std::to_string(k) + " elements");

    std::vector<Mask> trees;
    for (Mask f = 1; f < (Mask{1} << k); ++f) {
        std::vector<ObjectSet> family;
        for (std::size_t i = 0; i < k; ++i)
            if ((f >> i) & 1U) family.push_back(nonzero[i]);
        if (tree_check_by_definition(elements, zero, family)) trees.push_back(f);
    }
    std::vector<std::vector<ObjectSet>> out;
    for (auto t : trees) {
        bool maximal = std::none_of(trees.begin(), trees.end(), [&](Mask u) { return u != t && (u & t) == t; });
        if (!maximal) continue;
        std::vector<ObjectSet> family;
        for (std::size_t i = 0; i < k; ++i)
            if ((t >> i) & 1U) family.push_back(nonzero[i]);
        std::sort(family.begin(), family.end(), sorted_less);
        out.push_back(std::move(family));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), sorted_less);
    });
    return out;
}

FormalContext context_from_mask(std::size_t objects, std::size_t attributes, Mask cells) {
    std::vector<std::string> g_names;
    std::vector<std::string> m_names;
    for (std::size_t g = 0; g < objects; ++g) g_names.push_back("g" + std::to_string(g + 1));
    for (std::size_t m = 0; m < attributes; ++m) m_names.push_back("m" + std::to_string(m + 1));
    std::vector<std::vector<bool>> table(objects, std::vector<bool>(attributes));
    for (std::size_t g = 0; g < objects; ++g)
        for (std::size_t m = 0; m < attributes; ++m) table[g][m] = (cells >> (g * attributes + m)) & 1U;
    return FormalContext(std::move(g_names), std::move(m_names), table);
}

std::vector<FormalContext> exhaustive_contexts(std::size_t objects, std::size_t attributes) {
    const auto cells = objects * attributes;
    std::vector<FormalContext> out;
    for (Mask m = 0; m < (Mask{1} << cells); ++m) out.push_back(context_from_mask(objects, attributes, m));
    return out;
}

std::vector<FormalContext> random_contexts(std::uint64_t seed, std::size_t count, std::size_t max_dim) {
    static constexpr double kDensities[] = {0.2, 0.5, 0.8};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> dim(2, std::max<std::size_t>(2, max_dim));
    std::vector<FormalContext> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto n = dim(rng);
        const auto k = dim(rng);
        std::bernoulli_distribution cell(kDensities[i % 3]);
        while (true) {
            Mask cells = 0;
            for (std::size_t c = 0; c < n * k; ++c)
                if (cell(rng)) cells |= Mask{1} << c;
            auto ctx = context_from_mask(n, k, cells);
            if (ctx.empty_rows().empty() && ctx.empty_columns().empty()) {
                out.push_back(std::move(ctx));
                break;
            }
        }
    }
    return out;
}

}  // namespace boxtree::oracle
