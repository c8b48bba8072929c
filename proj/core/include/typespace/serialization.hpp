#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "typespace/cohomology.hpp"
#include "typespace/simplicial_map.hpp"
#include "typespace/structures.hpp"
#include "typespace/symmetric_set.hpp"

namespace typespace {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "typespace.report/1";
inline constexpr const char* kFunctorSchema = "typespace.functor/1";
inline constexpr const char* kMapSchema = "typespace.map/1";

/// Thrown for malformed input documents; what() names the line or field.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses JSON text; syntax errors are reported with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");

/// {"schema", "name", "max_dim", "levels": [[label...]...],
///  "action": {"swap": [[table...]...], "forget_last": [...], "dup_last": [...]}}
/// with the table layout of GeneratorTables. Materializes T (subject to cap).
Json functor_to_json(const TruncatedSymSS& T, std::size_t cap = kDefaultSizeCap);
TruncatedSymSS functor_from_json(const Json& j);

/// A functor reference inside a map document: either a full functor object or
/// {"builtin": name, "max_dim": D, "shift": s} (shift optional).
TruncatedSymSS functor_ref_from_json(const Json& j, std::size_t cap = kDefaultSizeCap);

/// {"schema", "name", "source", "target", "components": [[id...]...]}.
Json map_to_json(const SimplicialMapHandle& F, std::size_t cap = kDefaultSizeCap);
SimplicialMapHandle map_from_json(const Json& j, std::size_t cap = kDefaultSizeCap);

/// {"domain": [...], "relations": {"R": {"arity": 2, "tuples": [["a","b"]]}}}
Json structure_to_json(const FinStructure& M);
FinStructure structure_from_json(const Json& j);

Json report_to_json(const Report& r);
Json cohomology_to_json(const std::vector<CohomologyGroup>& groups, const CochainComplex& c);

/// Stable text rendering: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace typespace
