#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "arith/bounds.hpp"
#include "arith/egyptian.hpp"
#include "arith/error.hpp"
#include "arith/io.hpp"
#include "arith/mkn.hpp"
#include "arith/reduction.hpp"
#include "arith/structures.hpp"

namespace arith::cli {
namespace {

BigInt parse_big(const std::string& text, const std::string& what) {
  BigInt v;
  if (text.empty() || text.find_first_not_of("-0123456789") != std::string::npos ||
      v.set_str(text, 10) != 0) {
    throw Error(ErrorKind::Input, what + " must be an integer, got \"" + text + "\"");
  }
  return v;
}

std::int64_t parse_r_max(const std::string& text) {
  const BigInt v = parse_big(text, "--r-max");
  if (v < 1) throw Error(ErrorKind::Input, "--r-max must be at least 1");
  if (!fits_int64(v)) throw Error(ErrorKind::Input, "--r-max does not fit in 64 bits");
  return to_int64(v);
}

long default_precision() {
  const char* env = std::getenv(kPrecisionEnv);
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  const BigInt v = parse_big(env, kPrecisionEnv);
  if (v < 2 || v > kMaxPrecisionBits) {
    throw Error(ErrorKind::Input, std::string(kPrecisionEnv) + " must lie in [2, " +
                                      std::to_string(kMaxPrecisionBits) + "]");
  }
  return v.get_si();
}

long precision_or_default(long flag) {
  if (flag < 0) return default_precision();
  if (flag < 2 || flag > kMaxPrecisionBits) {
    throw Error(ErrorKind::Input,
                "--precision-bits must lie in [2, " + std::to_string(kMaxPrecisionBits) + "]");
  }
  return flag;
}

unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Graph selection shared by verify, reduce and enumerate.
struct GraphSource {
  std::string file;
  std::string family;
  std::size_t n = 0;
  std::string m;

  void attach(CLI::App* app) {
    app->add_option("--graph", file, "Graph JSON file");
    app->add_option("--family", family, "Graph family")->check(CLI::IsMember({"mkn", "path", "cycle"}));
    app->add_option("--n", n, "Number of vertices for --family");
    app->add_option("--m", m, "Edge multiplicity for --family mkn");
  }
};

struct ResolvedGraph {
  Multigraph graph;
  std::optional<BigInt> mkn_m;  // set when the graph is mK_n
};

ResolvedGraph resolve(const GraphSource& src, std::ostream& err) {
  if (!src.file.empty()) {
    if (!src.family.empty()) throw Error(ErrorKind::Input, "give either --graph or --family, not both");
    GraphInput in = graph_from_json(read_json_file(src.file));
    for (const auto& w : in.warnings) err << "warning: " << w << "\n";
    std::optional<BigInt> m;
    const Multigraph& g = in.graph;
    if (g.size() >= 2 && g.multiplicity(0, 1) > 0 &&
        g == Multigraph::complete(g.size(), g.multiplicity(0, 1))) {
      m = g.multiplicity(0, 1);
    }
    return {std::move(in.graph), m};
  }
  if (src.family.empty()) {
    throw Error(ErrorKind::Input, "a graph is required: --graph FILE or --family mkn|path|cycle --n N");
  }
  if (src.n == 0) throw Error(ErrorKind::Input, "--family needs --n");
  if (src.family == "mkn") {
    if (src.m.empty()) throw Error(ErrorKind::Input, "--family mkn needs --m");
    const BigInt m = parse_big(src.m, "--m");
    return {Multigraph::complete(src.n, m), m};
  }
  if (!src.m.empty()) throw Error(ErrorKind::Input, "--m only applies to --family mkn");
  if (src.family == "path") return {Multigraph::path(src.n), std::nullopt};
  return {Multigraph::cycle(src.n), std::nullopt};
}

// Structure given as a file or inline lists.
struct StructureSource {
  std::string file;
  std::vector<std::string> r;
  std::vector<std::string> d;

  void attach(CLI::App* app) {
    app->add_option("--structure", file, "Structure JSON file {\"r\": [...], \"d\": [...]}");
    app->add_option("--r", r, "r-vector, comma separated")->delimiter(',');
    app->add_option("--d", d, "d-vector, comma separated")->delimiter(',');
  }

  StructureInput load() const {
    if (!file.empty()) {
      if (!r.empty() || !d.empty()) throw Error(ErrorKind::Input, "give either --structure or --r/--d");
      return structure_from_json(read_json_file(file));
    }
    if (r.empty()) throw Error(ErrorKind::Input, "a structure is required: --structure FILE or --r LIST");
    StructureInput s;
    for (const auto& v : r) s.r.push_back(parse_big(v, "--r entry"));
    if (!d.empty()) {
      BigVector dv;
      for (const auto& v : d) dv.push_back(parse_big(v, "--d entry"));
      s.d = std::move(dv);
    }
    return s;
  }
};

BigInt neighbour_sum(const Multigraph& g, const BigVector& r, std::size_t i) {
  BigInt sum = 0;
  for (std::size_t j = 0; j < g.size(); ++j)
    if (j != i) sum += g.multiplicity(i, j) * r[j];
  return sum;
}

ArithStructure complete_structure(const Multigraph& g, const StructureInput& in) {
  if (in.d) return ArithStructure{in.r, *in.d};
  return d_from_r(g, in.r);
}

// ---------------------------------------------------------------------------

int cmd_verify(const GraphSource& gs, const StructureSource& ss, std::ostream& out,
               std::ostream& err) {
  const Multigraph g = resolve(gs, err).graph;
  const StructureInput in = ss.load();
  const std::size_t n = g.size();
  if (in.r.size() != n) {
    throw Error(ErrorKind::LengthMismatch, "r has " + std::to_string(in.r.size()) + " entries, graph has " +
                                               std::to_string(n) + " vertices");
  }
  if (in.d && in.d->size() != n) {
    throw Error(ErrorKind::LengthMismatch, "d has " + std::to_string(in.d->size()) +
                                               " entries, graph has " + std::to_string(n) + " vertices");
  }

  bool ok = true;
  Json vertices = Json::array();
  Json problems = Json::array();
  BigVector d(n);
  bool have_d = true;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string label = "v" + std::to_string(i + 1);
    const BigInt sum = neighbour_sum(g, in.r, i);
    Json v{{"vertex", i + 1}, {"r", to_json(in.r[i])}, {"neighbour_sum", to_json(sum)}};
    if (in.r[i] < 1) {
      ok = false;
      have_d = false;
      problems.push_back(label + ": r must be positive");
    } else if (in.d) {
      d[i] = (*in.d)[i];
      const BigInt residual = in.r[i] * d[i] - sum;
      v["d"] = to_json(d[i]);
      v["residual"] = to_json(residual);
      if (d[i] < 1) {
        ok = false;
        problems.push_back(label + ": d must be positive");
      }
      if (residual != 0) {
        ok = false;
        problems.push_back(label + ": r*d - neighbour sum = " + residual.get_str());
      }
    } else if (mpz_divisible_p(sum.get_mpz_t(), in.r[i].get_mpz_t())) {
      d[i] = sum / in.r[i];
      v["d"] = to_json(d[i]);
      v["residual"] = 0;
      if (d[i] < 1) {
        ok = false;
        problems.push_back(label + ": d = 0, the vertex has no neighbours");
      }
    } else {
      ok = false;
      have_d = false;
      const BigInt rem = sum % in.r[i];
      v["remainder"] = to_json(rem);
      problems.push_back(label + ": r = " + in.r[i].get_str() + " does not divide neighbour sum " +
                         sum.get_str());
    }
    vertices.push_back(std::move(v));
  }
  if (const BigInt common = gcd_of(in.r); common != 1) {
    ok = false;
    problems.push_back("gcd(r) = " + common.get_str() + ", not 1");
  }

  Json report{{"verified", ok}, {"r", to_json(in.r)}};
  if (have_d) report["d"] = to_json(d);
  report["vertices"] = std::move(vertices);
  report["problems"] = std::move(problems);
  dump(out, report);
  return ok ? kExitOk : kExitFalse;
}

int cmd_reduce(const GraphSource& gs, const StructureSource& ss, const std::vector<std::size_t>& vertices,
               std::ostream& out, std::ostream& err) {
  const Multigraph g = resolve(gs, err).graph;
  const ArithStructure s = complete_structure(g, ss.load());
  if (vertices.empty()) throw Error(ErrorKind::Input, "--vertex is required");
  std::vector<std::size_t> order;
  for (std::size_t v : vertices) {
    if (v == 0) throw Error(ErrorKind::IndexOutOfRange, "vertex labels start at 1");
    order.push_back(v - 1);
  }
  const auto chain = reduce_chain(g, s, order);
  if (chain.size() == 1) {
    dump(out, to_json(chain.front()));
  } else {
    Json steps = Json::array();
    for (const auto& step : chain) steps.push_back(to_json(step));
    dump(out, Json{{"steps", std::move(steps)}});
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Enumeration

EnumerationResult egyptian_result(std::size_t n, const BigInt& m, unsigned threads) {
  EnumerationResult result;
  result.method = "egyptian";
  result.complete = true;
  const auto started = std::chrono::steady_clock::now();
  if (n < 2) throw Error(ErrorKind::Input, "mK_n needs n >= 2");
  for (const auto& rep : enumerate_unit_fractions(n, BigInt(1), m, threads))
    result.structures.push_back(fractions_to_structure(rep));
  std::sort(result.structures.begin(), result.structures.end(), canonical_less);
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::int64_t certified_r_max(const Multigraph& g) {
  const BigInt certified = certified_r_bound(g);
  if (!fits_int64(certified)) {
    throw Error(ErrorKind::Input, "certified bound " + certified.get_str() +
                                      " is too large to search; pass --r-max");
  }
  return to_int64(certified);
}

void warn_if_incomplete(const EnumerationResult& result, std::ostream& err) {
  if (result.complete) return;
  err << "IncompleteWarning: r_max = " << to_string(*result.r_max)
      << " is below the certified bound";
  if (result.certified_bound) err << " " << to_string(*result.certified_bound);
  err << "; structures with larger r-values may be missing\n";
}

struct Agreement {
  bool agree = true;
  Json report;
};

// Runs recursive, egyptian and brute on mK_n and compares A_dec.
Agreement check_agree(std::size_t n, const BigInt& m, std::optional<std::int64_t> r_max,
                      unsigned threads, std::ostream& err) {
  const Multigraph g = Multigraph::complete(n, m);
  const EnumerationResult rec = enumerate_dec_mkn(n, m, threads);
  const EnumerationResult egy = egyptian_result(n, m, threads);

  BigInt observed = 0;
  for (const auto& s : rec.structures)
    for (const auto& v : s.r) observed = std::max(observed, v);
  if (!r_max) {
    // The certified bound when it is no larger than what the other methods
    // found; otherwise search up to the observed maximum and say so.
    const BigInt certified = certified_r_bound(g);
    r_max = to_int64(certified <= observed ? certified : observed);
  }
  const EnumerationResult brute = enumerate_brute(g, BruteOptions{*r_max, threads});
  warn_if_incomplete(brute, err);
  const std::vector<ArithStructure> classes = unordered_classes(g, brute.structures);

  Json mismatches = Json::array();
  if (egy.structures != rec.structures) mismatches.push_back("egyptian differs from recursive");
  if (classes != rec.structures) mismatches.push_back("brute differs from recursive");

  Agreement a;
  a.agree = mismatches.empty();
  Json brute_json{{"method", "brute"},
                  {"count", classes.size()},
                  {"ordered_count", brute.count()},
                  {"complete", brute.complete},
                  {"r_max", to_json(*brute.r_max)}};
  if (brute.certified_bound) brute_json["certified_bound"] = to_json(*brute.certified_bound);
  a.report = Json{{"n", n},
                  {"m", to_json(m)},
                  {"agree", a.agree},
                  {"count", rec.count()},
                  {"methods",
                   Json::array({Json{{"method", "recursive"}, {"count", rec.count()}, {"complete", true}},
                                Json{{"method", "egyptian"}, {"count", egy.count()}, {"complete", true}},
                                std::move(brute_json)})},
                  {"mismatches", std::move(mismatches)}};
  return a;
}

struct EnumerateConfig {
  GraphSource graph;
  std::string method;
  std::string r_max;
  bool check_agree = false;
  unsigned threads = default_threads();
  std::string format = "json";
  bool timing = false;
};

void print_result(const EnumerationResult& result, const EnumerateConfig& cfg,
                  const std::optional<std::size_t>& classes, std::ostream& out) {
  if (cfg.format == "plain") {
    for (const auto& s : result.structures) out << "r=" << to_string(s.r) << " d=" << to_string(s.d) << "\n";
    out << "count " << result.count() << "\n";
    if (classes) out << "classes " << *classes << "\n";
    return;
  }
  Json j = to_json(result, cfg.timing);
  if (classes) j["classes"] = *classes;
  dump(out, j);
}

int cmd_enumerate(const EnumerateConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.threads == 0) throw Error(ErrorKind::Input, "--threads must be at least 1");
  const ResolvedGraph rg = resolve(cfg.graph, err);
  const Multigraph& g = rg.graph;
  std::optional<std::int64_t> r_max;
  if (!cfg.r_max.empty()) r_max = parse_r_max(cfg.r_max);

  if (cfg.check_agree) {
    if (!rg.mkn_m) {
      throw Error(ErrorKind::Input, "--check-agree compares recursive, egyptian and brute, which all need mK_n");
    }
    const Agreement a = check_agree(g.size(), *rg.mkn_m, r_max, cfg.threads, err);
    dump(out, a.report);
    if (!a.agree) err << "methods disagree\n";
    return a.agree ? kExitOk : kExitFalse;
  }

  const std::string method = cfg.method.empty() ? (rg.mkn_m ? "recursive" : "brute") : cfg.method;
  if (method != "brute" && !rg.mkn_m) {
    throw Error(ErrorKind::Input, "--method " + method + " needs an mK_n graph");
  }
  if (method == "recursive") {
    print_result(enumerate_dec_mkn(g.size(), *rg.mkn_m, cfg.threads), cfg, std::nullopt, out);
  } else if (method == "egyptian") {
    print_result(egyptian_result(g.size(), *rg.mkn_m, cfg.threads), cfg, std::nullopt, out);
  } else {
    if (!r_max) r_max = certified_r_max(g);
    const EnumerationResult result = enumerate_brute(g, BruteOptions{*r_max, cfg.threads});
    warn_if_incomplete(result, err);
    std::optional<std::size_t> classes;
    if (rg.mkn_m) classes = unordered_classes(g, result.structures).size();
    print_result(result, cfg, classes, out);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct EgyptianConfig {
  std::size_t n = 0;
  std::string a = "1";
  std::string m;
  bool count_only = false;
  unsigned threads = default_threads();
};

int cmd_egyptian(const EgyptianConfig& cfg, std::ostream& out) {
  if (cfg.threads == 0) throw Error(ErrorKind::Input, "--threads must be at least 1");
  const BigInt a = parse_big(cfg.a, "--a");
  const BigInt m = parse_big(cfg.m, "--m");
  if (cfg.count_only) {
    out << f_n_count(cfg.n, a, m, cfg.threads).get_str() << "\n";
    return kExitOk;
  }
  for (const auto& rep : enumerate_unit_fractions(cfg.n, a, m, cfg.threads)) out << to_json(rep).dump() << "\n";
  return kExitOk;
}

struct BoundsConfig {
  std::size_t n = 0;
  std::string edges;
  std::string m;
  long precision_bits = -1;
};

int cmd_bounds(const BoundsConfig& cfg, std::ostream& out) {
  const long bits = precision_or_default(cfg.precision_bits);
  if (cfg.edges.empty() == cfg.m.empty()) throw Error(ErrorKind::Input, "give exactly one of --edges or --m");
  const BoundReport report = cfg.m.empty()
                                 ? bound_report_for_edges(cfg.n, parse_big(cfg.edges, "--edges"), bits)
                                 : bound_report_for_mkn(cfg.n, parse_big(cfg.m, "--m"), bits);
  dump(out, to_json(report));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// published table layout

struct TableConfig {
  std::vector<std::size_t> n_list;
  long m_max = -1;
  std::vector<std::string> m_list;
  std::string cells = "all";
  std::string method = "recursive";
  std::string out = "csv";
  long precision_bits = -1;
  unsigned threads = default_threads();
};

// Cells present in the published comparison table.
bool published_cell(std::size_t n, const BigInt& m) {
  if (n == 3) return (m >= 1 && m <= 10) || m == 100 || m == 101;
  if (n == 4) return m >= 1 && m <= 10;
  if (n == 5) return m == 1;
  return false;
}

int cmd_table(TableConfig cfg, std::ostream& out, std::ostream& err) {
  if (cfg.threads == 0) throw Error(ErrorKind::Input, "--threads must be at least 1");
  const long bits = precision_or_default(cfg.precision_bits);
  const bool published = cfg.cells == "published";
  if (cfg.n_list.empty()) {
    if (!published) throw Error(ErrorKind::Input, "--n-list is required");
    cfg.n_list = {3, 4, 5};
  }
  for (std::size_t n : cfg.n_list)
    if (n < 2) throw Error(ErrorKind::Input, "--n-list entries must be at least 2");
  if (cfg.m_max >= 0 && !cfg.m_list.empty()) throw Error(ErrorKind::Input, "give --m-max or --m-list, not both");

  std::vector<BigInt> ms;
  if (!cfg.m_list.empty()) {
    for (const auto& text : cfg.m_list) {
      ms.push_back(parse_big(text, "--m-list entry"));
      if (ms.back() < 1) throw Error(ErrorKind::Input, "--m-list entries must be positive");
    }
  } else if (cfg.m_max >= 0) {
    for (long m = 1; m <= cfg.m_max; ++m) ms.emplace_back(m);
  } else if (published) {
    for (long m = 1; m <= 10; ++m) ms.emplace_back(m);
    ms.emplace_back(100);
    ms.emplace_back(101);
  } else {
    throw Error(ErrorKind::Input, "--m-max or --m-list is required");
  }

  std::vector<TableRow> rows;
  Json json_rows = Json::array();
  for (const auto& m : ms) {
    TableRow row{m, {}, {}};
    Json cells = Json::array();
    for (std::size_t n : cfg.n_list) {
      if (published && !published_cell(n, m)) {
        row.counts.emplace_back();
        row.bounds.emplace_back();
        continue;
      }
      const BigInt count = cfg.method == "egyptian" ? f_n_count(n, BigInt(1), m, cfg.threads)
                                                    : BigInt(static_cast<unsigned long>(
                                                          enumerate_dec_mkn(n, m, cfg.threads).count()));
      const FloorEvaluation bound = mkn_bound(n, m, bits);
      if (bound.boundary_flag) {
        err << "warning: bound for n=" << n << ", m=" << m.get_str()
            << " lies within 2^-20 of an integer" << (bound.resolved ? "" : " and is unresolved") << "\n";
      }
      row.counts.emplace_back(count);
      row.bounds.emplace_back(bound.value);
      cells.push_back(Json{{"n", n},
                           {"count", to_json(count)},
                           {"bound", to_json(bound.value)},
                           {"boundary_flag", bound.boundary_flag}});
    }
    json_rows.push_back(Json{{"m", to_json(m)}, {"cells", std::move(cells)}});
    rows.push_back(std::move(row));
  }

  if (cfg.out == "json") {
    dump(out, json_rows);
  } else {
    write_table_csv(out, cfg.n_list, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CrosscheckConfig {
  std::vector<std::size_t> n_list;
  long m_max = -1;
  std::vector<std::string> m_list;
  bool brute = false;
  unsigned threads = default_threads();
};

// Every A_dec structure maps to a distinct representation of 1/m and back.
bool bijection_holds(std::size_t n, const BigInt& m, const EnumerationResult& rec, unsigned threads) {
  std::set<BigVector> from_structures;
  for (const auto& s : rec.structures) {
    const UnitFractionRep rep = structure_to_fractions(m, s);
    if (fractions_to_structure(rep) != s) return false;
    from_structures.insert(rep.x);
  }
  std::set<BigVector> reps;
  for (const auto& rep : enumerate_unit_fractions(n, BigInt(1), m, threads)) reps.insert(rep.x);
  return from_structures.size() == rec.count() && from_structures == reps;
}

int cmd_crosscheck(const CrosscheckConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.threads == 0) throw Error(ErrorKind::Input, "--threads must be at least 1");
  if (cfg.n_list.empty()) throw Error(ErrorKind::Input, "--n-list is required");
  std::vector<BigInt> ms;
  if (!cfg.m_list.empty()) {
    for (const auto& text : cfg.m_list) ms.push_back(parse_big(text, "--m-list entry"));
  } else if (cfg.m_max >= 1) {
    for (long m = 1; m <= cfg.m_max; ++m) ms.emplace_back(m);
  } else {
    throw Error(ErrorKind::Input, "--m-max or --m-list is required");
  }

  bool all = true;
  for (std::size_t n : cfg.n_list) {
    for (const auto& m : ms) {
      Json line;
      bool ok = true;
      const auto rec = enumerate_dec_mkn(n, m, cfg.threads);
      if (cfg.brute) {
        const Agreement a = check_agree(n, m, std::nullopt, cfg.threads, err);
        line = a.report;
        ok = a.agree;
      } else {
        const BigInt egy = f_n_count(n, BigInt(1), m, cfg.threads);
        ok = egy == static_cast<unsigned long>(rec.count());
        line = Json{{"n", n}, {"m", to_json(m)}, {"recursive", rec.count()}, {"egyptian", to_json(egy)}};
      }
      const bool bijection = bijection_holds(n, m, rec, cfg.threads);
      line["bijection"] = bijection;
      ok = ok && bijection;
      line["agree"] = ok;
      out << line.dump() << "\n";
      all = all && ok;
    }
  }
  if (!all) err << "crosscheck found disagreements\n";
  return all ? kExitOk : kExitFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetical structures on multigraphs"};
  app.name("arith");
  app.require_subcommand(1);

  GraphSource verify_graph, reduce_graph, enum_graph;
  StructureSource verify_structure, reduce_structure;
  std::vector<std::size_t> reduce_vertices;
  EnumerateConfig enum_cfg;
  EgyptianConfig egy_cfg;
  BoundsConfig bounds_cfg;
  TableConfig table_cfg;
  CrosscheckConfig cross_cfg;

  auto* verify = app.add_subcommand("verify", "Check a structure and print per-vertex residuals");
  verify_graph.attach(verify);
  verify_structure.attach(verify);

  auto* reduce = app.add_subcommand("reduce", "Remove a vertex and push the structure down");
  reduce_graph.attach(reduce);
  reduce_structure.attach(reduce);
  reduce->add_option("--vertex", reduce_vertices, "1-based vertex; a list reduces in sequence")
      ->delimiter(',');

  auto* enumerate = app.add_subcommand("enumerate", "List the arithmetical structures of a graph");
  enum_cfg.graph.attach(enumerate);
  enumerate->add_option("--method", enum_cfg.method, "recursive | egyptian | brute")
      ->check(CLI::IsMember({"recursive", "egyptian", "brute"}));
  enumerate->add_option("--r-max", enum_cfg.r_max, "Search box for brute force");
  enumerate->add_flag("--check-agree", enum_cfg.check_agree, "Run all methods and compare");
  enumerate->add_option("--threads", enum_cfg.threads, "Worker threads");
  enumerate->add_option("--format", enum_cfg.format, "json | plain")->check(CLI::IsMember({"json", "plain"}));
  enumerate->add_flag("--timing", enum_cfg.timing, "Include elapsed time in JSON output");

  auto* egyptian = app.add_subcommand("egyptian", "Representations a/m = 1/x_1 + ... + 1/x_n");
  egyptian->add_option("--n", egy_cfg.n, "Number of terms")->required();
  egyptian->add_option("--a", egy_cfg.a, "Numerator");
  egyptian->add_option("--m", egy_cfg.m, "Denominator")->required();
  egyptian->add_flag("--count-only", egy_cfg.count_only, "Print only the number of representations");
  egyptian->add_option("--threads", egy_cfg.threads, "Worker threads");

  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the number of structures");
  bounds->add_option("--n", bounds_cfg.n, "Number of vertices")->required();
  bounds->add_option("--edges", bounds_cfg.edges, "Edge count of a general multigraph");
  bounds->add_option("--m", bounds_cfg.m, "Multiplicity, for mK_n");
  bounds->add_option("--precision-bits", bounds_cfg.precision_bits,
                     std::string("Working precision (default from ") + kPrecisionEnv + " or 128)");

  auto* table = app.add_subcommand("table", "Counts against bounds for mK_n as CSV");
  table->add_option("--n-list", table_cfg.n_list, "Vertex counts, comma separated")->delimiter(',');
  table->add_option("--m-max", table_cfg.m_max, "Rows m = 1..M");
  table->add_option("--m-list", table_cfg.m_list, "Rows for these m")->delimiter(',');
  table->add_option("--cells", table_cfg.cells, "all | published (only the published cells)")
      ->check(CLI::IsMember({"all", "published"}));
  table->add_option("--method", table_cfg.method, "recursive | egyptian")
      ->check(CLI::IsMember({"recursive", "egyptian"}));
  table->add_option("--out", table_cfg.out, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--precision-bits", table_cfg.precision_bits, "Working precision for the bounds");
  table->add_option("--threads", table_cfg.threads, "Worker threads");

  auto* crosscheck = app.add_subcommand("crosscheck", "Compare enumeration methods over a grid of mK_n");
  crosscheck->add_option("--n-list", cross_cfg.n_list, "Vertex counts")->delimiter(',');
  crosscheck->add_option("--m-max", cross_cfg.m_max, "m = 1..M");
  crosscheck->add_option("--m-list", cross_cfg.m_list, "Explicit m values")->delimiter(',');
  crosscheck->add_flag("--brute", cross_cfg.brute, "Include the brute-force search");
  crosscheck->add_option("--threads", cross_cfg.threads, "Worker threads");

  std::vector<const char*> argv{"arith"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0, everything else is an input error.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_graph, verify_structure, out, err);
    if (reduce->parsed()) return cmd_reduce(reduce_graph, reduce_structure, reduce_vertices, out, err);
    if (enumerate->parsed()) return cmd_enumerate(enum_cfg, out, err);
    if (egyptian->parsed()) return cmd_egyptian(egy_cfg, out);
    if (bounds->parsed()) return cmd_bounds(bounds_cfg, out);
    if (table->parsed()) return cmd_table(table_cfg, out, err);
    if (crosscheck->parsed()) return cmd_crosscheck(cross_cfg, out, err);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace arith::cli
