#include "boxtree/context.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boxtree {

namespace {

constexpr std::size_t kBruteForceBelow = 12;
constexpr std::size_t kBruteForceHardCap = 30;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view bytes) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= bytes.size()) {
        auto end = bytes.find('\n', start);
        if (end == std::string_view::npos) end = bytes.size();
        auto line = bytes.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    // A final newline leaves one empty trailing entry.
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

std::size_t parse_count(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty()) throw ParseError(std::string("cxt: missing ") + what);
    std::size_t value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError(std::string("cxt: bad ") + what + " '" + std::string(s) + "'");
        value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
}

bool is_number(std::string_view s) {
    s = trim(s);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

FormalContext parse_cxt(std::string_view bytes) {
    auto lines = split_lines(bytes);
    std::size_t pos = 0;
    auto next_nonblank = [&]() -> std::string_view {
        while (pos < lines.size() && trim(lines[pos]).empty()) ++pos;
        if (pos >= lines.size()) throw ParseError("cxt: unexpected end of input");
        return lines[pos++];
    };
    if (trim(next_nonblank()) != "B") throw ParseError("cxt: first line must be 'B'");
    auto line = next_nonblank();
    if (!is_number(line)) line = next_nonblank();  // optional context name
    const auto n_objects = parse_count(line, "object count");
    const auto n_attributes = parse_count(next_nonblank(), "attribute count");

    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n_objects; ++i) objects.emplace_back(trim(next_nonblank()));
    for (std::size_t i = 0; i < n_attributes; ++i) attributes.emplace_back(trim(next_nonblank()));

    std::vector<std::vector<bool>> table;
    for (std::size_t g = 0; g < n_objects; ++g) {
        auto row = trim(next_nonblank());
        if (row.size() != n_attributes)
            throw ParseError("cxt: row " + std::to_string(g + 1) + " has " + std::to_string(row.size()) +
                             " cells, expected " + std::to_string(n_attributes));
        std::vector<bool> cells;
        for (char c : row) {
            if (c == 'X' || c == 'x')
                cells.push_back(true);
            else if (c == '.')
                cells.push_back(false);
            else
                throw ParseError(std::string("cxt: bad cell '") + c + "' in row " + std::to_string(g + 1));
        }
        table.push_back(std::move(cells));
    }
    while (pos < lines.size()) {
        if (!trim(lines[pos++]).empty()) throw ParseError("cxt: trailing data after the cross table");
    }
    return FormalContext(std::move(objects), std::move(attributes), table);
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        auto end = line.find(',', start);
        cells.push_back(trim(line.substr(start, end == std::string_view::npos ? end : end - start)));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return cells;
}

FormalContext parse_csv(std::string_view bytes) {
    auto lines = split_lines(bytes);
    if (lines.empty()) throw ParseError("csv: empty input");
    auto header = split_csv(lines[0]);
    if (header.size() < 2) throw ParseError("csv: header needs a name column and at least one attribute");
    std::vector<std::string> attributes(header.begin() + 1, header.end());

    std::vector<std::string> objects;
    std::vector<std::vector<bool>> table;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        auto cells = split_csv(lines[i]);
        if (cells.size() != header.size())
            throw ParseError("csv: line " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                             " cells, expected " + std::to_string(header.size()));
        objects.emplace_back(cells[0]);
        std::vector<bool> row;
        for (std::size_t j = 1; j < cells.size(); ++j) {
            if (cells[j] == "1")
                row.push_back(true);
            else if (cells[j] == "0")
                row.push_back(false);
            else
                throw ParseError("csv: line " + std::to_string(i + 1) + ": cell '" + std::string(cells[j]) +
                                 "' is not 0/1");
        }
        table.push_back(std::move(row));
    }
    return FormalContext(std::move(objects), std::move(attributes), table);
}

void check_names(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty()) throw ParseError(std::string("empty ") + what + " name");
        if (!seen.insert(n).second) throw ParseError(std::string("duplicate ") + what + " name '" + n + "'");
    }
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("BOXTREE_MAX_OBJECTS")) {
        char* end = nullptr;
        const auto v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) limits.max_objects = v;
    }
    return limits;
}

FormalContext::FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(objects)), attributes_(std::move(attributes)) {
    check_names(objects_, "object");
    check_names(attributes_, "attribute");
    if (incidence.size() != objects_.size())
        throw ParseError("incidence has " + std::to_string(incidence.size()) + " rows for " +
                         std::to_string(objects_.size()) + " objects");
    rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
    columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
    for (std::size_t g = 0; g < objects_.size(); ++g) {
        if (incidence[g].size() != attributes_.size())
            throw ParseError("incidence row " + std::to_string(g) + " is ragged");
        for (std::size_t m = 0; m < attributes_.size(); ++m) {
            if (incidence[g][m]) {
                rows_[g].set(m);
                columns_[m].set(g);
            }
        }
    }
}

std::vector<std::size_t> FormalContext::empty_rows() const {
    std::vector<std::size_t> out;
    for (std::size_t g = 0; g < rows_.size(); ++g)
        if (rows_[g].empty()) out.push_back(g);
    return out;
}

std::vector<std::size_t> FormalContext::empty_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t m = 0; m < columns_.size(); ++m)
        if (columns_[m].empty()) out.push_back(m);
    return out;
}

std::size_t FormalContext::find_object(std::string_view name) const {
    for (std::size_t g = 0; g < objects_.size(); ++g)
        if (objects_[g] == name) return g;
    return static_cast<std::size_t>(-1);
}

bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
}

LoadedContext load_context(std::string_view bytes, ContextFormat format, bool strict) {
    FormalContext ctx = format == ContextFormat::Cxt ? parse_cxt(bytes) : parse_csv(bytes);
    std::vector<std::string> notes;
    for (auto g : ctx.empty_rows()) notes.push_back("object '" + ctx.object_name(g) + "' has no attributes");
    for (auto m : ctx.empty_columns()) notes.push_back("attribute '" + ctx.attribute_name(m) + "' has no objects");
    if (strict && !notes.empty()) throw ValidationError(notes.front());
    return {std::move(ctx), std::move(notes)};
}

ContextFormat format_for_path(const std::string& path) {
    const auto dot = path.rfind('.');
    if (dot != std::string::npos) {
        auto ext = path.substr(dot + 1);
        std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
        if (ext == "csv") return ContextFormat::Csv;
    }
    return ContextFormat::Cxt;
}

LoadedContext load_context_file(const std::string& path, bool strict) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_context(buf.str(), format_for_path(path), strict);
}

std::string to_cxt(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n\n" << ctx.object_count() << '\n' << ctx.attribute_count() << "\n\n";
    for (const auto& g : ctx.objects()) out << g << '\n';
    for (const auto& m : ctx.attributes()) out << m << '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) out << (ctx.incident(g, m) ? 'X' : '.');
        out << '\n';
    }
    return out.str();
}

void check_dimension(const FormalContext& ctx, const ObjectSet& objects) {
    if (objects.universe() != ctx.object_count())
        throw DimensionError("object set over " + std::to_string(objects.universe()) + " objects, context has " +
                             std::to_string(ctx.object_count()));
}

void check_dimension(const FormalContext& ctx, const AttributeSet& attributes) {
    if (attributes.universe() != ctx.attribute_count())
        throw DimensionError("attribute set over " + std::to_string(attributes.universe()) +
                             " attributes, context has " + std::to_string(ctx.attribute_count()));
}

AttributeSet object_derive(const FormalContext& ctx, const ObjectSet& objects) {
    check_dimension(ctx, objects);
    auto shared = ctx.all_attributes();
    objects.for_each([&](std::size_t g) { shared &= ctx.row(g); });
    return shared;
}

ObjectSet attribute_derive(const FormalContext& ctx, const AttributeSet& attributes) {
    check_dimension(ctx, attributes);
    auto having = ctx.all_objects();
    attributes.for_each([&](std::size_t m) { having &= ctx.column(m); });
    return having;
}

ObjectSet closure(const FormalContext& ctx, const ObjectSet& objects, WorkCounters* counters) {
    if (counters) ++counters->closures;
    return attribute_derive(ctx, object_derive(ctx, objects));
}

bool is_extent(const FormalContext& ctx, const ObjectSet& objects, WorkCounters* counters) {
    return closure(ctx, objects, counters) == objects;
}

FormalConcept concept_of(const FormalContext& ctx, const ObjectSet& objects) {
    auto intent = object_derive(ctx, objects);
    auto extent = attribute_derive(ctx, intent);
    return {std::move(extent), std::move(intent)};
}

std::vector<ObjectSet> enumerate_extents(const FormalContext& ctx, const EnumerationLimits& limits,
                                         WorkCounters* counters) {
    if (ctx.object_count() > limits.max_objects)
        throw CapacityError("extent enumeration over " + std::to_string(ctx.object_count()) +
                            " objects exceeds the bound of " + std::to_string(limits.max_objects));
    if (counters) ++counters->extent_enumerations;
    if (ctx.object_count() < kBruteForceBelow) return enumerate_extents_brute(ctx, Execution::Serial, counters);
    return enumerate_extents_next_closure(ctx, counters, limits.max_extents);
}

std::vector<ObjectSet> enumerate_extents_brute(const FormalContext& ctx, Execution exec, WorkCounters* counters) {
    const auto n = ctx.object_count();
    if (n > kBruteForceHardCap) throw CapacityError("subset scan over " + std::to_string(n) + " objects");
    const std::uint64_t subsets = std::uint64_t{1} << n;

    std::vector<ObjectSet> found;
    if (exec == Execution::Serial) {
        std::unordered_set<ObjectSet> seen;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) seen.insert(closure(ctx, ObjectSet::from_mask(n, mask)));
        found.assign(seen.begin(), seen.end());
    } else {
        const auto total = static_cast<std::int64_t>(subsets);
#pragma omp parallel
        {
            std::unordered_set<ObjectSet> local;
#pragma omp for schedule(static) nowait
            for (std::int64_t mask = 0; mask < total; ++mask)
                local.insert(closure(ctx, ObjectSet::from_mask(n, static_cast<std::uint64_t>(mask))));
#pragma omp critical(boxtree_brute_merge)
            found.insert(found.end(), local.begin(), local.end());
        }
    }
    if (counters) counters->closures += subsets;
    canonicalize(found);
    return found;
}

std::vector<ObjectSet> enumerate_extents_next_closure(const FormalContext& ctx, WorkCounters* counters,
                                                      std::size_t max_extents) {
    const auto n = ctx.object_count();
    std::vector<ObjectSet> out;
    auto current = closure(ctx, ctx.no_objects(), counters);
    const auto all = ctx.all_objects();
    while (true) {
        if (out.size() == max_extents)
            throw CapacityError("more than " + std::to_string(max_extents) + " extents");
        out.push_back(current);
        if (current == all) break;
        // Lectic successor: largest i not in current whose closure adds nothing below i.
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            if (current.test(i)) {
                current.reset(i);
                continue;
            }
            auto candidate = current;
            candidate.set(i);
            auto closed = closure(ctx, candidate, counters);
            bool canonical = true;
            for (std::size_t j = 0; j < i; ++j) {
                if (closed.test(j) && !current.test(j)) {
                    canonical = false;
                    break;
                }
            }
            if (canonical) {
                current = std::move(closed);
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    canonicalize(out);
    return out;
}

FormalContext subcontext(const FormalContext& ctx, const ObjectSet& keep) {
    check_dimension(ctx, keep);
    if (keep.empty()) throw EmptySubcontextError("subcontext needs at least one object");
    std::vector<std::string> names;
    std::vector<std::vector<bool>> table;
    keep.for_each([&](std::size_t g) {
        names.push_back(ctx.object_name(g));
        std::vector<bool> row(ctx.attribute_count());
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m) row[m] = ctx.incident(g, m);
        table.push_back(std::move(row));
    });
    return FormalContext(std::move(names), ctx.attributes(), table);
}

FormalContext with_object(const FormalContext& ctx, const std::string& name, const AttributeSet& row) {
    check_dimension(ctx, row);
    auto names = ctx.objects();
    names.push_back(name);
    std::vector<std::vector<bool>> table;
    for (std::size_t g = 0; g <= ctx.object_count(); ++g) {
        std::vector<bool> cells(ctx.attribute_count());
        for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
            cells[m] = g < ctx.object_count() ? ctx.incident(g, m) : row.test(m);
        table.push_back(std::move(cells));
    }
    return FormalContext(std::move(names), ctx.attributes(), table);
}

}  // namespace boxtree
