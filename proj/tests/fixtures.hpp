#pragma once

#include "boxtree/context.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fixtures {

using boxtree::FormalContext;
using boxtree::ObjectSet;

inline FormalContext table(std::vector<std::string> objects, std::vector<std::string> attributes,
                           std::initializer_list<const char*> rows) {
    std::vector<std::vector<bool>> cells;
    for (const char* r : rows) {
        std::vector<bool> row;
        for (const char* c = r; *c; ++c) row.push_back(*c == 'X' || *c == '1');
        cells.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), cells);
}

// 2x2 identity.
inline FormalContext ctx_a() { return table({"g1", "g2"}, {"m1", "m2"}, {"X.", ".X"}); }
// ctx_a plus g3 carrying m1.
inline FormalContext ctx_b() { return table({"g1", "g2", "g3"}, {"m1", "m2"}, {"X.", ".X", "X."}); }
// The closure of the empty set is {h1}.
inline FormalContext ctx_c() { return table({"h1", "h2"}, {"m1", "m2"}, {"XX", "X."}); }
// Contranominal scale on a,b,c,d: every subset is a box extent.
inline FormalContext ctx_d() {
    return table({"a", "b", "c", "d"}, {"ma", "mb", "mc", "md"}, {".XXX", "X.XX", "XX.X", "XXX."});
}
inline FormalContext contranominal(std::size_t n) {
    std::vector<std::string> g, m;
    std::vector<std::vector<bool>> cells(n, std::vector<bool>(n, true));
    for (std::size_t i = 0; i < n; ++i) {
        g.push_back("g" + std::to_string(i + 1));
        m.push_back("m" + std::to_string(i + 1));
        cells[i][i] = false;
    }
    return FormalContext(g, m, cells);
}

inline ObjectSet set(const FormalContext& ctx, std::initializer_list<const char*> names) {
    ObjectSet out = ctx.no_objects();
    for (const char* n : names) out.set(ctx.find_object(n));
    return out;
}

inline std::vector<ObjectSet> family(const FormalContext& ctx,
                                     std::initializer_list<std::initializer_list<const char*>> members) {
    std::vector<ObjectSet> out;
    for (const auto& m : members) out.push_back(set(ctx, m));
    return out;
}

inline boxtree::AttributeSet attrs(const FormalContext& ctx, std::initializer_list<std::size_t> idx) {
    return boxtree::AttributeSet(ctx.attribute_count(), idx);
}

}  // namespace fixtures
