#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arith/bigint.hpp"
#include "arith/bounds.hpp"
#include "arith/egyptian.hpp"
#include "arith/multigraph.hpp"
#include "arith/reduction.hpp"
#include "arith/structures.hpp"

namespace arith {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings. Readers accept either.
Json to_json(const BigInt& v);
Json to_json(const BigVector& v);
BigInt big_from_json(const Json& j, const std::string& what);
BigVector vector_from_json(const Json& j, const std::string& what);

/// Parses text as JSON, throwing Error(Parse) with the parser's message.
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

struct GraphInput {
  Multigraph graph;
  std::vector<std::string> warnings;
};

/// {"n": N, "edges": [[i, j, mult], ...]} with 1-based i < j, or
/// {"matrix": [[...], ...]}. Duplicate pairs and out-of-range labels are
/// errors; loops are dropped with a warning.
GraphInput graph_from_json(const Json& j);
/// Edge-list form with 1-based i < j.
Json graph_to_json(const Multigraph& g);

/// {"r": [...], "d": [...]}; d may be omitted on input.
struct StructureInput {
  BigVector r;
  std::optional<BigVector> d;
};
StructureInput structure_from_json(const Json& j);
Json to_json(const ArithStructure& s);

/// Wall time is left out unless asked for, so output is reproducible.
Json to_json(const EnumerationResult& result, bool with_timing = false);
Json to_json(const UnitFractionRep& rep);
Json to_json(const FloorEvaluation& f);
Json to_json(const BoundReport& report);
Json to_json(const ReducedStructure& reduced);

/// One table row: counts and bounds per requested n, empty when skipped.
struct TableRow {
  BigInt m;
  std::vector<std::optional<BigInt>> counts;
  std::vector<std::optional<BigInt>> bounds;
};

/// m,count_n3,bound_n3,count_n4,bound_n4,... then one line per row.
void write_table_csv(std::ostream& out, const std::vector<std::size_t>& ns,
                     const std::vector<TableRow>& rows);

}  // namespace arith
