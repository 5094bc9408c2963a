#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace boxtree {

/// Subset of a finite index universe [0, n) with bit-level membership.
///
/// The tag keeps object sets and attribute sets from being mixed up; the two
/// only meet through the derivation operators of a FormalContext.
template <class Tag>
class IndexSet {
public:
    using bits_type = boost::dynamic_bitset<std::uint64_t>;

    IndexSet() = default;
    explicit IndexSet(std::size_t universe) : bits_(universe) {}
    IndexSet(std::size_t universe, std::initializer_list<std::size_t> members) : bits_(universe) {
        for (auto i : members) bits_.set(i);
    }

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        s.bits_.set();
        return s;
    }
    static IndexSet of(std::size_t universe, const std::vector<std::size_t>& members) {
        IndexSet s(universe);
        for (auto i : members) s.bits_.set(i);
        return s;
    }
    /// Low `universe` bits of `mask`; index i is member iff bit i is set.
    static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
        IndexSet s(universe);
        for (std::size_t i = 0; i < universe && i < 64; ++i)
            if ((mask >> i) & 1U) s.bits_.set(i);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool test(std::size_t i) const { return bits_.test(i); }
    bool contains(std::size_t i) const { return i < bits_.size() && bits_.test(i); }

    IndexSet& set(std::size_t i) { bits_.set(i); return *this; }
    IndexSet& reset(std::size_t i) { bits_.reset(i); return *this; }

    bool is_subset_of(const IndexSet& o) const { return bits_.is_subset_of(o.bits_); }
    bool is_proper_subset_of(const IndexSet& o) const { return bits_.is_proper_subset_of(o.bits_); }
    bool intersects(const IndexSet& o) const { return bits_.intersects(o.bits_); }
    bool comparable_with(const IndexSet& o) const { return is_subset_of(o) || o.is_subset_of(*this); }

    IndexSet& operator&=(const IndexSet& o) { bits_ &= o.bits_; return *this; }
    IndexSet& operator|=(const IndexSet& o) { bits_ |= o.bits_; return *this; }
    IndexSet& operator-=(const IndexSet& o) { bits_ -= o.bits_; return *this; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }
    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.bits_ == b.bits_; }

    /// Members in ascending index order.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (auto i = bits_.find_first(); i != bits_type::npos; i = bits_.find_next(i)) out.push_back(i);
        return out;
    }
    template <class F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != bits_type::npos; i = bits_.find_next(i)) f(i);
    }
    std::size_t first() const { return bits_.find_first(); }
    std::size_t next(std::size_t i) const { return bits_.find_next(i); }
    static constexpr std::size_t npos = bits_type::npos;

    const bits_type& bits() const { return bits_; }

private:
    bits_type bits_;
};

struct ObjectTag {};
struct AttributeTag {};

using ObjectSet = IndexSet<ObjectTag>;
using AttributeSet = IndexSet<AttributeTag>;

/// Canonical subset order: ascending cardinality, then lexicographic on the
/// ascending index sequences.
template <class Tag>
bool canonical_less(const IndexSet<Tag>& a, const IndexSet<Tag>& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    auto i = a.first();
    auto j = b.first();
    while (i != IndexSet<Tag>::npos && j != IndexSet<Tag>::npos) {
        if (i != j) return i < j;
        i = a.next(i);
        j = b.next(j);
    }
    return false;
}

struct CanonicalLess {
    template <class Tag>
    bool operator()(const IndexSet<Tag>& a, const IndexSet<Tag>& b) const { return canonical_less(a, b); }
};

/// Sorts into canonical order and removes duplicates.
template <class Tag>
void canonicalize(std::vector<IndexSet<Tag>>& sets) {
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

/// Lexicographic comparison of two canonical families, member by member.
template <class Tag>
bool family_less(const std::vector<IndexSet<Tag>>& a, const std::vector<IndexSet<Tag>>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalLess{});
}

}  // namespace boxtree

template <class Tag>
struct std::hash<boxtree::IndexSet<Tag>> {
    std::size_t operator()(const boxtree::IndexSet<Tag>& s) const noexcept {
        std::size_t h = s.universe();
        s.for_each([&](std::size_t i) { h = h * 1000003U ^ (i + 0x9e3779b97f4a7c15ULL); });
        return h;
    }
};
