#pragma once

#include "boxtree/errors.hpp"
#include "boxtree/subset.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boxtree {

/// Work accounting handed to an operation by its caller. Operations only
/// increment the fields; nothing is shared behind the caller's back.
struct WorkCounters {
    std::uint64_t closures = 0;
    std::uint64_t extent_enumerations = 0;
    std::uint64_t lattice_builds = 0;

    WorkCounters& operator+=(const WorkCounters& o) {
        closures += o.closures;
        extent_enumerations += o.extent_enumerations;
        lattice_builds += o.lattice_builds;
        return *this;
    }
};

/// Size guards for the exponential or output-sensitive enumerations.
struct EnumerationLimits {
    std::size_t max_objects = 24;
    std::size_t max_tree_lattice = 20;
    /// Output-size guard for lectic enumeration.
    std::size_t max_extents = std::size_t{1} << 22;

    /// Defaults, overridden by BOXTREE_MAX_OBJECTS when it holds a positive integer.
    static EnumerationLimits from_environment();
};

/// A formal context (G, M, I) stored as a dense cross table. Immutable once built.
class FormalContext {
public:
    /// Throws ParseError on duplicate/empty names or ragged tables.
    FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                  const std::vector<std::vector<bool>>& incidence);

    std::size_t object_count() const { return objects_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }
    const std::vector<std::string>& objects() const { return objects_; }
    const std::vector<std::string>& attributes() const { return attributes_; }
    const std::string& object_name(std::size_t g) const { return objects_.at(g); }
    const std::string& attribute_name(std::size_t m) const { return attributes_.at(m); }

    bool incident(std::size_t g, std::size_t m) const { return rows_[g].test(m); }
    /// Attribute set of object g, i.e. {g}'.
    const AttributeSet& row(std::size_t g) const { return rows_[g]; }
    /// Object set of attribute m, i.e. {m}'.
    const ObjectSet& column(std::size_t m) const { return columns_[m]; }

    ObjectSet no_objects() const { return ObjectSet(object_count()); }
    ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
    AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
    AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

    std::vector<std::size_t> empty_rows() const;
    std::vector<std::size_t> empty_columns() const;

    /// Index of the named object, or npos.
    std::size_t find_object(std::string_view name) const;

    friend bool operator==(const FormalContext& a, const FormalContext& b);

private:
    std::vector<std::string> objects_;
    std::vector<std::string> attributes_;
    std::vector<AttributeSet> rows_;
    std::vector<ObjectSet> columns_;
};

struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;
};

enum class ContextFormat { Cxt, Csv };

struct LoadedContext {
    FormalContext context;
    /// Lenient-mode notes about empty rows/columns; empty in strict mode.
    std::vector<std::string> diagnostics;
};

/// Parses a Burmeister .cxt or 0/1 CSV table. Strict mode rejects all-false
/// rows and columns with ValidationError.
LoadedContext load_context(std::string_view bytes, ContextFormat format, bool strict = true);
LoadedContext load_context_file(const std::string& path, bool strict = true);
/// Guesses the format from the file extension (".csv" vs anything else).
ContextFormat format_for_path(const std::string& path);

std::string to_cxt(const FormalContext& ctx);

/// A' : attributes shared by every object in A (all of M for A = {}).
AttributeSet object_derive(const FormalContext& ctx, const ObjectSet& objects);
/// B' : objects having every attribute in B (all of G for B = {}).
ObjectSet attribute_derive(const FormalContext& ctx, const AttributeSet& attributes);
/// A'' ; counts one closure in `counters` when given.
ObjectSet closure(const FormalContext& ctx, const ObjectSet& objects, WorkCounters* counters = nullptr);
bool is_extent(const FormalContext& ctx, const ObjectSet& objects, WorkCounters* counters = nullptr);
FormalConcept concept_of(const FormalContext& ctx, const ObjectSet& objects);

/// Brute-force and next-closure paths below share no code beyond closure().
enum class Execution { Serial, Parallel };

/// All extents in canonical order. Uses the subset scan below 12 objects and
/// lectic-order enumeration otherwise. CapacityError past limits.max_objects.
std::vector<ObjectSet> enumerate_extents(const FormalContext& ctx, const EnumerationLimits& limits = {},
                                         WorkCounters* counters = nullptr);
/// Closes every subset of G. The parallel variant splits the subset range
/// across OpenMP threads; both return the same canonical sequence.
std::vector<ObjectSet> enumerate_extents_brute(const FormalContext& ctx, Execution exec = Execution::Serial,
                                               WorkCounters* counters = nullptr);
/// Ganter's next-closure over objects, emitted in canonical order.
/// CapacityError once more than `max_extents` extents have been produced.
std::vector<ObjectSet> enumerate_extents_next_closure(const FormalContext& ctx, WorkCounters* counters = nullptr,
                                                      std::size_t max_extents = SIZE_MAX);

/// Rows restricted to `keep`, attributes unchanged, order preserved.
FormalContext subcontext(const FormalContext& ctx, const ObjectSet& keep);
/// Context with one extra object appended as the last row.
FormalContext with_object(const FormalContext& ctx, const std::string& name, const AttributeSet& row);

void check_dimension(const FormalContext& ctx, const ObjectSet& objects);
void check_dimension(const FormalContext& ctx, const AttributeSet& attributes);

}  // namespace boxtree
