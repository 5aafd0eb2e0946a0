#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "wbk/compose.hpp"
#include "wbk/solutions.hpp"
#include "wbk/subset.hpp"

namespace wbk {

using Structure = std::variant<FiniteGroupTable, SemilatticeTable, SkewBrace, DualWeakBrace,
                               StrongSemilatticeSpec, SolutionTable>;

/// The "kind" tag used in structure files.
std::string_view kind_name(const Structure& s);

/// Parses and fully validates a structure document. Throws ParseError (with
/// the byte offset for malformed JSON) or the forwarded validation error.
Structure parse_structure(std::string_view text);
Structure structure_from_json(const nlohmann::json& j);

/// Canonical JSON form.
nlohmann::json to_json(const Structure& s);
std::string serialize(const Structure& s);

struct CatalogEntry {
  std::string name;
  std::string kind;
  std::string provenance;
  Structure payload;
};

/// The built-in catalog, validated on first use.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_list();
/// Permutation convention recorded with the catalog.
const std::string& catalog_convention();

/// "catalog:<name>" or a bare catalog name resolves against the catalog;
/// anything else is read as a file path. Throws UnknownName / ParseError.
Structure load(std::string_view source);

/// Groups become trivial skew braces, semilattices trivial weak braces, and
/// strong semilattice specs are composed. Throws UsageError for solutions.
DualWeakBrace as_dual_weak_brace(const Structure& s);

/// A random valid strong semilattice of catalog skew braces over one of the
/// catalog semilattices whose elements each have at most one lower cover.
/// Deterministic in `seed`.
StrongSemilatticeSpec random_spec(std::uint64_t seed);

/// Parses "0,2,4" (optionally wrapped in braces) into a subset.
Subset parse_subset(std::size_t universe, std::string_view text);

}  // namespace wbk
