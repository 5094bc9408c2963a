#include "boxtree/format.hpp"

#include <fstream>
#include <sstream>

namespace boxtree {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string header(const char* kind) { return std::string("# boxtree ") + kind + " " + kFormatVersion + "\n"; }

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string placement(bool in_s, bool in_f) {
    if (in_s && in_f) return "SF";
    if (in_s) return "S";
    if (in_f) return "F";
    return "-";
}

}  // namespace

std::string format_set(const std::vector<std::string>& names, const ObjectSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ',';
        out += names.at(i);
        first = false;
    });
    return out + "}";
}

std::string format_set(const FormalContext& ctx, const ObjectSet& s) { return format_set(ctx.objects(), s); }

std::string format_bits(const ObjectSet& s) {
    std::string out;
    for (std::size_t i = 0; i < s.universe(); ++i) out += s.test(i) ? '1' : '0';
    return out;
}

ObjectSet parse_set(const FormalContext& ctx, std::string_view line) {
    line = trim(line);
    if (!line.empty() && line.front() == '{') {
        const auto close = line.find('}');
        if (close == std::string_view::npos) throw ParseError("unterminated set '" + std::string(line) + "'");
        line = line.substr(1, close - 1);
    } else {
        const auto tab = line.find('\t');
        if (tab != std::string_view::npos) line = line.substr(0, tab);
    }
    ObjectSet out = ctx.no_objects();
    std::size_t start = 0;
    while (start <= line.size()) {
        auto end = line.find_first_of(", ", start);
        if (end == std::string_view::npos) end = line.size();
        auto name = trim(line.substr(start, end - start));
        if (!name.empty()) {
            const auto g = ctx.find_object(name);
            if (g == static_cast<std::size_t>(-1)) throw ParseError("unknown object '" + std::string(name) + "'");
            out.set(g);
        }
        start = end + 1;
    }
    return out;
}

std::vector<ObjectSet> read_tree_text(const FormalContext& ctx, std::string_view text) {
    std::vector<ObjectSet> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_set(ctx, line));
    }
    return out;
}

std::vector<ObjectSet> read_tree_file(const FormalContext& ctx, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_tree_text(ctx, buf.str());
}

std::string listing_text(const FormalContext& ctx, const std::vector<ObjectSet>& sets) {
    std::string out;
    for (const auto& s : sets) out += format_set(ctx, s) + "\n";
    return out;
}

std::string box_lattice_structured(const FormalContext& ctx, const BoxLattice& lat) {
    std::ostringstream out;
    out << header("box-lattice");
    out << "objects";
    for (const auto& g : ctx.objects()) out << ' ' << g;
    out << "\nzero " << format_set(ctx, lat.zero()) << "\ntop " << format_set(ctx, lat.top()) << '\n';
    for (std::size_t i = 0; i < lat.size(); ++i) out << "element " << i << ' ' << format_set(ctx, lat.elements()[i]) << '\n';
    for (const auto& a : lat.atoms()) out << "atom " << lat.index_of(a) << '\n';
    for (const auto& [lo, hi] : cover_relation(lat)) out << "cover " << lo << ' ' << hi << '\n';
    return out.str();
}

std::string box_lattice_dot(const FormalContext& ctx, const BoxLattice& lat) {
    std::ostringstream out;
    out << "digraph box_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < lat.size(); ++i) {
        out << "  n" << i << " [label=" << dot_quote(format_set(ctx, lat.elements()[i]));
        if (lat.elements()[i] == lat.zero()) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& [lo, hi] : cover_relation(lat)) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string partition_structured(const FormalContext& ctx, const ExtentPartition& p) {
    std::string out = header("partition");
    if (p.degenerate) out += "degenerate\n";
    for (const auto& b : p.blocks) out += "block " + format_set(ctx, b) + "\n";
    return out;
}

std::string tree_text(const FormalContext& ctx, const std::vector<ObjectSet>& tree) {
    auto members = tree;
    canonicalize(members);
    const auto levels = decompose_levels(members);
    std::string out = header("tree");
    for (const auto& m : members) {
        std::size_t level = 0;
        for (std::size_t k = 0; k < levels.size(); ++k)
            if (std::find(levels[k].begin(), levels[k].end(), m) != levels[k].end()) level = k + 1;
        out += format_set(ctx, m) + "\tlevel=" + std::to_string(level) + "\n";
    }
    return out;
}

std::string tree_dot(const FormalContext& ctx, const std::vector<ObjectSet>& tree) {
    auto members = tree;
    canonicalize(members);
    const auto parent = tree_parents(members);
    std::ostringstream out;
    out << "digraph classification_tree {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < members.size(); ++i)
        out << "  t" << i << " [label=" << dot_quote(format_set(ctx, members[i])) << "];\n";
    for (std::size_t i = 0; i < members.size(); ++i)
        if (parent[i] != static_cast<std::size_t>(-1)) out << "  t" << parent[i] << " -> t" << i << ";\n";
    out << "}\n";
    return out.str();
}

std::string fate_table_text(const ExtensionProblem& prob, const std::vector<FateRecord>& fates) {
    std::string out;
    for (const auto& f : fates) {
        out += "fate " + format_set(prob.sub(), f.member) + " " + fate_name(f.fate) + " " + witness_name(f.witness_kind) + "=" +
               format_set(prob.full(), f.witness) + "\n";
    }
    return out;
}

std::string lista_fa_text(const ExtensionProblem& prob, const ListaFaResult& result) {
    std::ostringstream out;
    out << header("lista-fa");
    out << "mode " << (result.mode == ListaMode::Faithful ? "faithful" : "normative") << '\n';
    out << "columns";
    for (const auto& g : prob.full().objects()) out << ' ' << g;
    out << "\nz " << prob.full().object_name(prob.z()) << '\n';
    out << "S " << result.s.size() << '\n';
    for (std::size_t i = 0; i < result.s.size(); ++i)
        out << "S[" << i + 1 << "] " << format_bits(result.s[i]) << ' ' << format_set(prob.full(), result.s[i]) << '\n';
    out << "F " << result.f.size() << '\n';
    for (std::size_t i = 0; i < result.f.size(); ++i)
        out << "F[" << i + 1 << "] " << format_bits(result.f[i]) << ' ' << format_set(prob.sub(), result.f[i]) << '\n';
    for (const auto& d : result.deviations)
        out << "deviation row=" << d.row << " set=" << format_set(prob.sub(), d.set)
            << " faithful=" << placement(d.faithful_in_s, d.faithful_in_f)
            << " normative=" << placement(d.normative_in_s, d.normative_in_f) << '\n';
    return out.str();
}

}  // namespace boxtree
