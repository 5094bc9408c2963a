#include "boxtree/box_lattice.hpp"

#include <sstream>

namespace boxtree {

namespace {

std::string show_indices(const ObjectSet& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out << ',';
        out << i;
        first = false;
    });
    out << '}';
    return out.str();
}

void merge_overlapping(std::vector<ObjectSet>& blocks) {
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < blocks.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < blocks.size(); ++j) {
                if (blocks[i].intersects(blocks[j])) {
                    blocks[i] |= blocks[j];
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                    break;
                }
            }
        }
    }
}

}  // namespace

Verdict is_extent_partition(const FormalContext& ctx, const std::vector<ObjectSet>& blocks) {
    auto covered = ctx.no_objects();
    for (const auto& b : blocks) {
        if (b.universe() != ctx.object_count()) return Verdict::fail("block over the wrong universe", b);
        if (b.empty()) return Verdict::fail("empty block", b);
        if (covered.intersects(b)) return Verdict::fail("blocks overlap at " + show_indices(covered & b), b);
        covered |= b;
        if (!is_extent(ctx, b)) return Verdict::fail("block " + show_indices(b) + " is not an extent", b);
    }
    if (covered != ctx.all_objects()) return Verdict::fail("blocks miss " + show_indices(ctx.all_objects() - covered));
    return Verdict::pass();
}

ExtentPartition merge_close_fixpoint(const FormalContext& ctx, std::vector<ObjectSet> seeds, WorkCounters* counters) {
    ExtentPartition out;
    out.degenerate = !closure(ctx, ctx.no_objects(), counters).empty();
    for (auto& s : seeds) s = closure(ctx, s, counters);
    bool changed = true;
    while (changed) {
        merge_overlapping(seeds);
        changed = false;
        for (auto& s : seeds) {
            auto closed = closure(ctx, s, counters);
            if (closed != s) {
                s = std::move(closed);
                changed = true;
            }
        }
    }
    canonicalize(seeds);
    out.blocks = std::move(seeds);
    out.block_of.assign(ctx.object_count(), 0);
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        out.blocks[b].for_each([&](std::size_t g) { out.block_of[g] = b; });
    return out;
}

ExtentPartition finest_extent_partition(const FormalContext& ctx, WorkCounters* counters) {
    std::vector<ObjectSet> seeds;
    seeds.reserve(ctx.object_count());
    for (std::size_t g = 0; g < ctx.object_count(); ++g) seeds.push_back(ObjectSet(ctx.object_count(), {g}));
    return merge_close_fixpoint(ctx, std::move(seeds), counters);
}

FlaggedSet smallest_box_extent(const FormalContext& ctx, std::size_t g, WorkCounters* counters) {
    if (g >= ctx.object_count()) throw DimensionError("object index " + std::to_string(g) + " out of range");
    auto finest = finest_extent_partition(ctx, counters);
    return {finest.block_containing(g), finest.degenerate};
}

bool is_box_extent(const FormalContext& ctx, const ExtentPartition& finest, const ObjectSet& candidate,
                   WorkCounters* counters) {
    check_dimension(ctx, candidate);
    if (finest.degenerate) {
        return candidate == ctx.all_objects() || candidate == closure(ctx, ctx.no_objects(), counters);
    }
    bool unions_blocks = true;
    candidate.for_each([&](std::size_t g) {
        if (unions_blocks && !finest.block_containing(g).is_subset_of(candidate)) unions_blocks = false;
    });
    return unions_blocks && is_extent(ctx, candidate, counters);
}

bool is_box_extent(const FormalContext& ctx, const ObjectSet& candidate) {
    return is_box_extent(ctx, finest_extent_partition(ctx), candidate);
}

BoxLattice::BoxLattice(std::vector<ObjectSet> elements, ExtentPartition finest, ObjectSet zero)
    : elements_(std::move(elements)), finest_(std::move(finest)), zero_(std::move(zero)) {
    canonicalize(elements_);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    for (const auto& e : elements_) {
        if (e == zero_) continue;
        bool minimal = true;
        for (const auto& f : elements_) {
            if (f != zero_ && f != e && f.is_subset_of(e)) {
                minimal = false;
                break;
            }
        }
        if (minimal) atoms_.push_back(e);
    }
}

std::size_t BoxLattice::index_of(const ObjectSet& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw NotAnElementError(show_indices(e) + " is not a box extent");
    return it->second;
}

void BoxLattice::require(const ObjectSet& e) const { (void)index_of(e); }

std::vector<ObjectSet> BoxLattice::nonzero_elements() const {
    std::vector<ObjectSet> out;
    for (const auto& e : elements_)
        if (e != zero_) out.push_back(e);
    return out;
}

BoxLattice box_extents(const FormalContext& ctx, const EnumerationLimits& limits, WorkCounters* counters) {
    if (counters) ++counters->lattice_builds;
    auto extents = enumerate_extents(ctx, limits, counters);
    auto finest = finest_extent_partition(ctx, counters);
    auto zero = extents.front();  // the closure of the empty set is the least extent
    std::vector<ObjectSet> boxes;
    for (auto& e : extents)
        if (is_box_extent(ctx, finest, e)) boxes.push_back(std::move(e));
    return BoxLattice(std::move(boxes), std::move(finest), std::move(zero));
}

ObjectSet box_meet(const BoxLattice& lat, const ObjectSet& a, const ObjectSet& b) {
    lat.require(a);
    lat.require(b);
    return a & b;
}

ObjectSet box_join(const BoxLattice& lat, const ObjectSet& a, const ObjectSet& b) {
    lat.require(a);
    lat.require(b);
    const auto lower = a | b;
    // Canonical order lists smaller sets first, so the first upper bound is
    // the least one.
    for (const auto& e : lat.elements())
        if (lower.is_subset_of(e)) return e;
    return lat.top();
}

std::vector<std::pair<std::size_t, std::size_t>> cover_relation(const BoxLattice& lat) {
    const auto& el = lat.elements();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < el.size(); ++i) {
        for (std::size_t j = 0; j < el.size(); ++j) {
            if (!el[i].is_proper_subset_of(el[j])) continue;
            bool direct = true;
            for (std::size_t k = 0; k < el.size() && direct; ++k)
                if (el[i].is_proper_subset_of(el[k]) && el[k].is_proper_subset_of(el[j])) direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    }
    return covers;
}

}  // namespace boxtree
