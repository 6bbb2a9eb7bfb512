#include "arith/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "arith/error.hpp"

namespace arith {

Json to_json(const BigInt& v) {
  if (fits_int64(v)) return to_int64(v);
  return v.get_str();
}

Json to_json(const BigVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

BigInt big_from_json(const Json& j, const std::string& what) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return from_int64(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    BigInt v;
    const bool digits = !text.empty() && text.find_first_not_of("-0123456789") == std::string::npos;
    if (!digits || v.set_str(text, 10) != 0) {
      throw Error(ErrorKind::Parse, what + ": \"" + text + "\" is not an integer");
    }
    return v;
  }
  throw Error(ErrorKind::Parse, what + " must be an integer");
}

BigVector vector_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, what + " must be an array");
  BigVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(big_from_json(j[i], what + "[" + std::to_string(i) + "]"));
  return out;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace {

std::size_t size_from_json(const Json& j, const std::string& what) {
  const BigInt v = big_from_json(j, what);
  if (v < 1 || !v.fits_ulong_p()) throw Error(ErrorKind::Input, what + " must be a positive size");
  return v.get_ui();
}

}  // namespace

GraphInput graph_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "graph must be a JSON object");
  const bool has_edges = j.contains("edges");
  const bool has_matrix = j.contains("matrix");
  if (has_edges == has_matrix) {
    throw Error(ErrorKind::Parse, "graph needs exactly one of \"edges\" or \"matrix\"");
  }

  std::vector<std::string> warnings;
  if (has_matrix) {
    const Json& rows = j.at("matrix");
    if (!rows.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
    BigMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.push_back(vector_from_json(rows[i], "matrix[" + std::to_string(i) + "]"));
    for (const auto& row : m)
      if (row.size() != m.size()) throw Error(ErrorKind::NotSquare, "matrix is not square");
    if (has_loops(m)) warnings.push_back("loops on the diagonal were dropped");
    return GraphInput{Multigraph::from_matrix(m), std::move(warnings)};
  }

  if (!j.contains("n")) throw Error(ErrorKind::Parse, "edge-list graph needs \"n\"");
  const std::size_t n = size_from_json(j.at("n"), "n");
  const Json& edges = j.at("edges");
  if (!edges.is_array()) throw Error(ErrorKind::Parse, "edges must be an array");
  BigMatrix m(n, BigVector(n));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string where = "edges[" + std::to_string(e) + "]";
    const Json& edge = edges[e];
    if (!edge.is_array() || edge.size() != 3) {
      throw Error(ErrorKind::Parse, where + " must be [i, j, mult]");
    }
    const std::size_t a = size_from_json(edge[0], where + " i");
    const std::size_t b = size_from_json(edge[1], where + " j");
    const BigInt mult = big_from_json(edge[2], where + " mult");
    if (a > n || b > n) {
      throw Error(ErrorKind::IndexOutOfRange, where + " names a vertex outside 1.." + std::to_string(n));
    }
    if (mult < 1) throw Error(ErrorKind::Input, where + " multiplicity must be at least 1");
    if (a >= b) {
      if (a == b) {
        warnings.push_back("loop at vertex " + std::to_string(a) + " was dropped");
        continue;
      }
      throw Error(ErrorKind::Input, where + " must list i < j");
    }
    if (auto [it, fresh] = seen.emplace(std::make_pair(a, b), e); !fresh) {
      throw Error(ErrorKind::Input, where + " repeats the pair (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ") from edges[" +
                                        std::to_string(it->second) + "]");
    }
    m[a - 1][b - 1] = mult;
    m[b - 1][a - 1] = mult;
  }
  return GraphInput{Multigraph::from_matrix(m), std::move(warnings)};
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g.multiplicity(i, j) > 0) edges.push_back({i + 1, j + 1, to_json(g.multiplicity(i, j))});
  return Json{{"n", g.size()}, {"edges", std::move(edges)}};
}

StructureInput structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r")) {
    throw Error(ErrorKind::Parse, "structure must be an object with \"r\"");
  }
  StructureInput s;
  s.r = vector_from_json(j.at("r"), "r");
  if (j.contains("d") && !j.at("d").is_null()) s.d = vector_from_json(j.at("d"), "d");
  return s;
}

Json to_json(const ArithStructure& s) { return Json{{"r", to_json(s.r)}, {"d", to_json(s.d)}}; }

Json to_json(const EnumerationResult& result, bool with_timing) {
  Json out{{"count", result.count()}, {"complete", result.complete}, {"method", result.method}};
  if (result.r_max) out["r_max"] = to_json(*result.r_max);
  if (result.certified_bound) out["certified_bound"] = to_json(*result.certified_bound);
  if (with_timing) out["elapsed_seconds"] = result.elapsed_seconds;
  Json list = Json::array();
  for (const auto& s : result.structures) list.push_back(to_json(s));
  out["structures"] = std::move(list);
  return out;
}

Json to_json(const UnitFractionRep& rep) {
  return Json{{"a", to_json(rep.a)}, {"m", to_json(rep.m)}, {"x", to_json(rep.x)}};
}

Json to_json(const FloorEvaluation& f) {
  Json out{{"value", to_json(f.value)},
           {"precision_bits", f.precision_bits},
           {"boundary_flag", f.boundary_flag},
           {"resolved", f.resolved},
           {"formula_applicable", f.formula_applicable},
           {"log_f_argument", f.log_f_argument},
           {"log_f", f.log_f}};
  if (!f.note.empty()) out["note"] = f.note;
  return out;
}

Json to_json(const BoundReport& report) {
  Json out{{"n", report.n}, {"edges", to_json(report.edges)}};
  if (report.m) out["m"] = to_json(*report.m);
  out["general"] = to_json(report.general);
  const BigRational& q = report.r1;
  out["r1"] = Json{{"numerator", to_json(BigInt(q.get_num()))},
                   {"denominator", to_json(BigInt(q.get_den()))},
                   {"floor", to_json(floor_div(q.get_num(), q.get_den()))}};
  if (report.mkn) out["mkn"] = to_json(*report.mkn);
  return out;
}

Json to_json(const ReducedStructure& reduced) {
  return Json{{"removed_vertex", reduced.step.removed_vertex + 1},
              {"s", to_json(reduced.step.s)},
              {"g", to_json(reduced.step.g)},
              {"graph", graph_to_json(reduced.graph)},
              {"structure", to_json(reduced.structure)}};
}

void write_table_csv(std::ostream& out, const std::vector<std::size_t>& ns,
                     const std::vector<TableRow>& rows) {
  out << "m";
  for (std::size_t n : ns) out << ",count_n" << n << ",bound_n" << n;
  out << "\n";
  for (const auto& row : rows) {
    out << row.m.get_str();
    for (std::size_t k = 0; k < ns.size(); ++k) {
      out << ",";
      if (k < row.counts.size() && row.counts[k]) out << row.counts[k]->get_str();
      out << ",";
      if (k < row.bounds.size() && row.bounds[k]) out << row.bounds[k]->get_str();
    }
    out << "\n";
  }
}

}  // namespace arith
