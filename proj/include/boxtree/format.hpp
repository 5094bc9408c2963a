#pragma once

// Line-oriented output formats.
//
// Sets are written as object names in index order inside braces, comma
// separated without spaces: "{g1,g3}", "{}" for the empty set.
//
// Structured files start with "# boxtree <kind> v1". Blank lines and lines
// starting with '#' are comments for every reader here.

#include "boxtree/box_lattice.hpp"
#include "boxtree/class_tree.hpp"
#include "boxtree/incremental.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace boxtree {

inline constexpr const char* kFormatVersion = "v1";

std::string format_set(const std::vector<std::string>& names, const ObjectSet& s);
std::string format_set(const FormalContext& ctx, const ObjectSet& s);
/// 0/1 membership string in index order.
std::string format_bits(const ObjectSet& s);

/// Parses "{a,b}" or "a b" / "a,b" (braces optional). Anything after the
/// closing brace is ignored. ParseError on unknown names.
ObjectSet parse_set(const FormalContext& ctx, std::string_view line);

/// One member per non-comment line.
std::vector<ObjectSet> read_tree_text(const FormalContext& ctx, std::string_view text);
std::vector<ObjectSet> read_tree_file(const FormalContext& ctx, const std::string& path);

/// One set per line.
std::string listing_text(const FormalContext& ctx, const std::vector<ObjectSet>& sets);

/// Structured lattice export:
///   # boxtree box-lattice v1
///   objects <name>...
///   zero <set>
///   top <set>
///   element <index> <set>     (canonical order)
///   atom <index>
///   cover <lower-index> <upper-index>
std::string box_lattice_structured(const FormalContext& ctx, const BoxLattice& lat);
/// Hasse diagram, one node per box extent, edges lower -> upper.
std::string box_lattice_dot(const FormalContext& ctx, const BoxLattice& lat);

/// Structured partition export: header, optional "degenerate" line, then "block <set>".
std::string partition_structured(const FormalContext& ctx, const ExtentPartition& p);

/// Tree export: header, then "<set>\tlevel=<k>" per member, level 1 lowest.
/// read_tree_text() accepts this format.
std::string tree_text(const FormalContext& ctx, const std::vector<ObjectSet>& tree);
/// Parent edge = smallest member strictly containing the child.
std::string tree_dot(const FormalContext& ctx, const std::vector<ObjectSet>& tree);

/// Fate table: "fate <member> <fate> <witness-label>=<set>".
std::string fate_table_text(const ExtensionProblem& prob, const std::vector<FateRecord>& fates);

/// Listing output:
///   # boxtree lista-fa v1
///   mode <faithful|normative>
///   columns <G names in index order>
///   z <name>
///   S <count>
///   S[i] <bits over G> <set over G>
///   F <count>
///   F[i] <bits over H> <set over H>
///   deviation row=<i> set=<set> faithful=<S|F|SF|-> normative=<S|F|->
std::string lista_fa_text(const ExtensionProblem& prob, const ListaFaResult& result);

}  // namespace boxtree
