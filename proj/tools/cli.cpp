#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "k2ham/cells.hpp"
#include "k2ham/certificate.hpp"
#include "k2ham/constructions.hpp"
#include "k2ham/error.hpp"
#include "k2ham/formats.hpp"
#include "k2ham/grinberg.hpp"
#include "k2ham/named.hpp"
#include "k2ham/parallel.hpp"
#include "k2ham/predicates.hpp"

namespace k2ham::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Globals {
  int jobs = 0;
  std::uint64_t node_limit = 0;
  bool one_based = false;

  PredicateOptions options(int job_override = -1) const {
    PredicateOptions o;
    o.search.node_limit = node_limit;
    o.jobs = job_override > 0 ? job_override : effective_jobs();
    return o;
  }

  int effective_jobs() const {
    if (jobs > 0) return jobs;
    if (const char* env = std::getenv("K2HAM_JOBS")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 1;
  }

  int in(int label) const { return one_based ? label - 1 : label; }
  int out(int label) const { return one_based ? label + 1 : label; }
};

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    return line.find(' ') != std::string::npos || line.find('\t') != std::string::npos;
  }
  return false;
}

// A catalog name, "-" (first line of stdin), a file (graph6/sparse6 first
// line or an edge list), or a literal graph6/sparse6 string.
Graph resolve_graph(const std::string& spec, std::istream& in) {
  if (named::is_catalog_name(spec)) return named::by_name(spec);
  std::string text;
  if (spec == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else if (std::filesystem::is_regular_file(spec)) {
    text = slurp(spec);
  } else {
    return decode_graph_line(spec);
  }
  if (looks_like_edge_list(text)) return decode_edge_list(text);
  std::istringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (!line.empty()) return decode_graph_line(line);
  }
  throw ParseError("no graph in input");
}

std::vector<int> parse_labels(const std::string& text, std::size_t count, const Globals& gl, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(gl.in(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": '" + item + "' is not a vertex label");
    }
  }
  if (count && out.size() != count) {
    throw UsageError(std::string(what) + " needs " + std::to_string(count) + " comma-separated labels");
  }
  return out;
}

std::string join(const std::vector<int>& seq, const Globals& gl) {
  std::string s;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(gl.out(seq[i]));
  }
  return s;
}

const char* mark(bool b) { return b ? "✓" : "✗"; }
const char* word(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- predicates

struct Outcome {
  bool verdict = false;
  bool undecided = false;
};

const std::vector<std::string> kPredicates{"hamiltonian", "non-hamiltonian", "k1",         "k2",
                                           "hypo",        "k2hypo",          "snark",      "cubic",
                                           "class2",      "c4c",             "3-connected", "cell-suitable",
                                           "cell-k1",     "cell-k2",         "girth>=N"};

std::optional<int> girth_bound(const std::string& pred) {
  const std::string prefix = "girth>=";
  if (pred.rfind(prefix, 0) != 0) return std::nullopt;
  try {
    return std::stoi(pred.substr(prefix.size()));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void validate_predicate(const std::string& pred) {
  if (girth_bound(pred)) return;
  if (pred == "girth>=N" || std::find(kPredicates.begin(), kPredicates.end(), pred) == kPredicates.end()) {
    std::string list;
    for (const auto& p : kPredicates) list += " " + p;
    throw UsageError("unknown predicate '" + pred + "'; known:" + list);
  }
}

Outcome from_report(const PredicateReport& r) { return {r.verdict, r.undecided}; }

Outcome evaluate_predicate(const std::string& pred, const Graph& g, const PredicateOptions& o) {
  if (auto bound = girth_bound(pred)) {
    auto gi = girth(g);
    return {!gi || *gi >= *bound, false};
  }
  if (pred == "hamiltonian") return from_report(hamiltonian_report(g, o));
  if (pred == "non-hamiltonian") {
    auto r = hamiltonian_report(g, o);
    return {!r.verdict && !r.undecided, r.undecided};
  }
  if (pred == "k1") return from_report(is_k1_hamiltonian(g, o));
  if (pred == "k2") return from_report(is_k2_hamiltonian(g, o));
  if (pred == "hypo") return from_report(is_hypohamiltonian(g, o));
  if (pred == "k2hypo") return from_report(is_k2_hypohamiltonian(g, o));
  if (pred == "snark") return {is_snark(g).verdict, false};
  if (pred == "cubic") return {g.order() > 0 && g.is_cubic(), false};
  if (pred == "class2") return {g.order() > 0 && g.is_cubic() && cubic_chromatic_class(g) == 2, false};
  if (pred == "c4c") return {g.is_connected() && is_cyclically_4_edge_connected(g), false};
  if (pred == "3-connected") return {is_k_connected(g, 3), false};
  CellLevel level = pred == "cell-k1" ? CellLevel::k1 : (pred == "cell-k2" ? CellLevel::k2 : CellLevel::suitable);
  FindCellsOptions fo;
  fo.level = level;
  fo.jobs = o.jobs;
  return {!find_cells(g, fo).empty(), false};
}

bool is_certifiable(const std::string& pred) {
  return pred == "hamiltonian" || pred == "k1" || pred == "k2" || pred == "hypo" || pred == "k2hypo";
}

PredicateReport certifiable_report(const std::string& pred, const Graph& g, const PredicateOptions& o) {
  if (pred == "hamiltonian") return hamiltonian_report(g, o);
  if (pred == "k1") return is_k1_hamiltonian(g, o);
  if (pred == "k2") return is_k2_hamiltonian(g, o);
  if (pred == "hypo") return is_hypohamiltonian(g, o);
  return is_k2_hypohamiltonian(g, o);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- filter

struct FilterArgs {
  std::string pred;
  bool negate = false;
  bool count = false;
  bool strict = false;
  bool quiet = false;
  bool certificates = false;
  std::string input;
};

int cmd_filter(const FilterArgs& a, const Globals& gl, std::istream& in, std::ostream& out, std::ostream& err) {
  validate_predicate(a.pred);
  if (a.certificates && !is_certifiable(a.pred)) {
    throw UsageError("certificates exist for hamiltonian, k1, k2, hypo and k2hypo");
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!a.input.empty() && a.input != "-") {
    file.open(a.input);
    if (!file) throw UsageError("cannot read " + a.input);
    src = &file;
  }
  const int jobs = gl.effective_jobs();
  PredicateOptions per_graph = gl.options(1);

  enum class Kind { match, miss, undecided, malformed, skipped };
  struct Item {
    std::size_t lineno;
    std::string text;
    Kind kind = Kind::miss;
    std::string message;
    std::string certificate;
  };
  std::size_t total = 0, matched = 0, undecided = 0, malformed = 0, skipped = 0;
  std::size_t lineno = 0;
  const std::size_t window = static_cast<std::size_t>(jobs) * 64;
  std::vector<Item> batch;
  bool eof = false;
  while (!eof) {
    batch.clear();
    std::string line;
    while (batch.size() < window) {
      if (!std::getline(*src, line)) {
        eof = true;
        break;
      }
      ++lineno;
      line = trim(line);
      if (line.empty() || line.rfind(">>", 0) == 0) continue;
      batch.push_back(Item{lineno, line, Kind::miss, {}, {}});
    }
    parallel_for(batch.size(), jobs, [&](std::size_t i) {
      Item& it = batch[i];
      Graph g;
      try {
        g = decode_graph_line(it.text);
      } catch (const Error& e) {
        it.kind = Kind::malformed;
        it.message = e.what();
        return;
      }
      try {
        if (a.certificates) {
          auto t0 = std::chrono::steady_clock::now();
          auto r = certifiable_report(a.pred, g, per_graph);
          it.kind = r.undecided ? Kind::undecided : (r.verdict != a.negate ? Kind::match : Kind::miss);
          if (it.kind == Kind::match) it.certificate = certify_predicate(g, a.pred, r, ms_since(t0)).dump();
          return;
        }
        Outcome o = evaluate_predicate(a.pred, g, per_graph);
        if (o.undecided) {
          it.kind = Kind::undecided;
        } else {
          it.kind = (o.verdict != a.negate) ? Kind::match : Kind::miss;
        }
      } catch (const PreconditionError& e) {
        it.kind = Kind::skipped;
        it.message = e.what();
      }
    });
    for (const Item& it : batch) {
      switch (it.kind) {
        case Kind::malformed:
          ++malformed;
          err << "line " << it.lineno << ": " << it.message << '\n';
          if (a.strict) {
            out.flush();
            return kExitParse;
          }
          continue;
        case Kind::match:
          ++matched;
          if (a.certificates) {
            out << it.certificate << '\n';
          } else if (!a.count) {
            out << it.text << '\n';
          }
          break;
        case Kind::undecided:
          ++undecided;
          err << "line " << it.lineno << ": undecided (node limit)\n";
          break;
        case Kind::skipped:
          ++skipped;
          break;
        case Kind::miss:
          break;
      }
      ++total;
    }
  }
  if (a.count) out << matched << '\n';
  if (!a.quiet) {
    err << "total " << total << ", matched " << matched << ", undecided " << undecided << ", skipped " << skipped
        << ", malformed " << malformed << '\n';
  }
  if (undecided && a.strict) return kExitUndecided;
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct ExpectArg {
  std::string value;
  int apply(bool verdict, bool undecided) const {
    if (undecided) return kExitUndecided;
    if (value.empty()) return kExitOk;
    return (value == "true") == verdict ? kExitOk : kExitFalse;
  }
};

void write_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << '\n';
}

struct CheckArgs {
  std::string graph;
  std::string pred;
  ExpectArg expect;
  std::string certificate;
  bool verbose = false;
};

int cmd_check(const CheckArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  validate_predicate(a.pred);
  Graph g = resolve_graph(a.graph, in);
  auto o = gl.options();
  auto t0 = std::chrono::steady_clock::now();
  if (is_certifiable(a.pred)) {
    PredicateReport r = certifiable_report(a.pred, g, o);
    out << a.pred << ": " << (r.undecided ? "undecided" : word(r.verdict)) << " (n=" << g.order() << ")\n";
    if (a.verbose) {
      for (const auto& w : r.witnesses) out << "  G-{" << join(w.deleted, gl) << "}: " << join(w.cycle, gl) << '\n';
      if (r.counterexample) {
        if (r.counterexample->empty()) {
          out << "  G is hamiltonian";
          if (r.counter_witness) out << ": " << join(*r.counter_witness, gl);
          out << '\n';
        } else {
          out << "  G-{" << join(*r.counterexample, gl) << "} is not hamiltonian\n";
        }
      }
    }
    if (!a.certificate.empty()) write_json(certify_predicate(g, a.pred, r, ms_since(t0)), a.certificate, out);
    return a.expect.apply(r.verdict, r.undecided);
  }
  if (!a.certificate.empty()) throw UsageError("certificates exist for hamiltonian, k1, k2, hypo and k2hypo");
  Outcome oc = evaluate_predicate(a.pred, g, o);
  out << a.pred << ": " << (oc.undecided ? "undecided" : word(oc.verdict)) << " (n=" << g.order() << ")\n";
  if (a.verbose && a.pred == "snark") {
    SnarkReport s = is_snark(g);
    out << "  cubic " << word(s.cubic) << ", cyclically 4-edge-connected " << word(s.cyclically_4_edge_connected)
        << ", class " << s.chromatic_class << ", girth " << (s.girth ? std::to_string(*s.girth) : "inf") << '\n';
  }
  return a.expect.apply(oc.verdict, oc.undecided);
}

// ---------------------------------------------------------------- cells

std::array<int, 4> outer_for(const std::string& graph_spec, const std::string& outer, const Globals& gl) {
  if (outer.empty()) {
    if (graph_spec == "j18") return named::kJ18Outer;
    throw UsageError("--outer a,b,c,d is required");
  }
  auto v = parse_labels(outer, 4, gl, "--outer");
  return {v[0], v[1], v[2], v[3]};
}

CellLevel parse_level(const std::string& s) {
  if (s == "k1") return CellLevel::k1;
  if (s == "k2") return CellLevel::k2;
  return CellLevel::suitable;
}

struct CellArgs {
  std::string graph;
  std::string outer;
  std::string level = "suitable";
  bool ledger = false;
  bool raw = false;
  ExpectArg expect;
  std::string certificate;
};

int cmd_cell_verify(const CellArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  Cell cell(g, outer_for(a.graph, a.outer, gl));
  auto t0 = std::chrono::steady_clock::now();
  CellLevel level = parse_level(a.level);
  auto o = gl.options();
  CellVerdict v;
  if (level == CellLevel::suitable) {
    v = check_suitable(cell, o);
  } else if (level == CellLevel::k1) {
    v = check_k1_cell(cell, o);
  } else {
    // both cell kinds are reported at the top level
    v = check_k2_cell(cell, o);
    CellVerdict k1 = check_k1_cell(cell, o);
    v.k1 = k1.k1;
  }
  out << "suitable " << mark(v.suitable);
  if (level == CellLevel::k2) out << " k1 " << mark(v.k1);
  if (level != CellLevel::suitable) out << (level == CellLevel::k1 ? " k1 " : " k2 ") << mark(level == CellLevel::k1 ? v.k1 : v.k2);
  if (v.undecided) out << " (undecided)";
  out << '\n';
  if (a.ledger) {
    for (const auto& c : v.ledger) out << "  " << describe(c, cell) << '\n';
  }
  bool verdict = level == CellLevel::suitable ? v.suitable : (level == CellLevel::k1 ? v.k1 : v.k2);
  if (!a.certificate.empty()) {
    std::string claim = "cell-" + a.level;
    write_json(certify_cell(cell, claim, v, ms_since(t0)), a.certificate, out);
  }
  return a.expect.apply(verdict, v.undecided);
}

int cmd_cell_find(const CellArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  FindCellsOptions fo;
  fo.level = parse_level(a.level);
  fo.dedup = !a.raw;
  fo.jobs = gl.effective_jobs();
  auto cells = find_cells(g, fo);
  for (const auto& q : cells) out << join({q.begin(), q.end()}, gl) << '\n';
  out << cells.size() << (a.raw ? " labellings\n" : " cells up to relabelling\n");
  return kExitOk;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::vector<std::string> cells;
  std::vector<std::string> cell;
  std::string variant = "k2";
  bool no_verify = false;
  std::string first, second;
  int first_vertex = -1, second_vertex = -1;
  bool first_trivial = false, second_trivial = false;
  std::string g, h, ab, cd, xy, primes;
  bool find = false;
  std::string format = "g6";
};

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "s6") {
    out << encode_sparse6(g) << '\n';
  } else if (format == "edges") {
    out << encode_edge_list(g);
  } else {
    out << encode_graph6(g) << '\n';
  }
}

Cell parse_cell(const std::string& item, const Globals& gl, std::istream& in) {
  auto at = item.find('@');
  std::string spec = item.substr(0, at);
  std::string outer = at == std::string::npos ? "" : item.substr(at + 1);
  return Cell(resolve_graph(spec, in), outer_for(spec, outer, gl));
}

int cmd_build_gamma(const BuildArgs& a, const Globals& gl, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Cell> cells;
  for (const auto& c : a.cells) cells.push_back(parse_cell(c, gl, in));
  for (const auto& c : a.cell) cells.push_back(parse_cell(c, gl, in));
  auto r = build_gamma(cells, a.variant == "k1" ? GammaVariant::k1 : GammaVariant::k2, !a.no_verify, gl.options());
  err << "identified " << cells.size() << " cells: " << r.graph.order() << " vertices, " << r.graph.size()
      << " edges\n";
  emit_graph(r.graph, a.format, out);
  return kExitOk;
}

int cmd_build_glue(const BuildArgs& a, const Globals& gl, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g1 = resolve_graph(a.first, in);
  Graph g2 = resolve_graph(a.second, in);
  int v1 = gl.in(a.first_vertex);
  int v2 = gl.in(a.second_vertex);
  Fragment f1 = a.first_trivial ? trivial_fragment_at(g1, v1) : fragment_from_cubic_vertex(g1, v1);
  Fragment f2 = a.second_trivial ? trivial_fragment_at(g2, v2) : fragment_from_cubic_vertex(g2, v2);
  auto r = glue(f1, f2);
  if (r.both_trivial) err << "warning: both fragments are trivial\n";
  err << "glued: " << r.graph.order() << " vertices, " << r.graph.size() << " edges\n";
  emit_graph(r.graph, a.format, out);
  return kExitOk;
}

int cmd_build_dot(const BuildArgs& a, const Globals& gl, std::istream& in, std::ostream& out, std::ostream& err) {
  Graph g = resolve_graph(a.g, in);
  Graph h = resolve_graph(a.h, in);
  int aa, bb, cc, dd, x, y;
  if (a.find) {
    auto gl5 = find_dot_labels_g(g, 1, gl.options());
    auto hl = find_dot_labels_h(h, 1, gl.options());
    if (gl5.empty()) throw PreconditionError("no edge pair of G satisfies (i)-(iii)");
    if (hl.empty()) throw PreconditionError("no edge of H satisfies (iv)-(vi)");
    aa = gl5[0][0], bb = gl5[0][1], cc = gl5[0][2], dd = gl5[0][3];
    x = hl[0].u, y = hl[0].v;
  } else {
    if (a.ab.empty() || a.cd.empty() || a.xy.empty()) throw UsageError("--ab, --cd and --xy are required without --find");
    auto ab = parse_labels(a.ab, 2, gl, "--ab");
    auto cd = parse_labels(a.cd, 2, gl, "--cd");
    auto xy = parse_labels(a.xy, 2, gl, "--xy");
    aa = ab[0], bb = ab[1], cc = cd[0], dd = cd[1], x = xy[0], y = xy[1];
  }
  std::optional<std::array<int, 4>> primes;
  if (!a.primes.empty()) {
    auto p = parse_labels(a.primes, 4, gl, "--primes");
    primes = std::array<int, 4>{p[0], p[1], p[2], p[3]};
  }
  DotSpec s = make_dot_spec(g, h, aa, bb, cc, dd, x, y, primes);
  auto r = dot_product(g, h, s);
  err << "dot product at ab=" << gl.out(s.a) << "," << gl.out(s.b) << " cd=" << gl.out(s.c) << "," << gl.out(s.d)
      << " xy=" << gl.out(s.x) << "," << gl.out(s.y) << ": " << r.graph.order() << " vertices\n";
  emit_graph(r.graph, a.format, out);
  return kExitOk;
}

// ---------------------------------------------------------------- conditions

struct ConditionArgs {
  std::string graph;
  std::string ab, cd, xy;
  bool verbose = false;
  ExpectArg expect;
};

void print_report(const ConditionReport& r, const std::vector<std::string>& names, bool verbose, const Globals& gl,
                  std::ostream& out) {
  for (const auto& n : names) out << n << ' ' << mark(r.holds(n)) << '\n';
  if (!verbose) return;
  for (const auto& c : r.checks) {
    out << "  " << c.condition << ' ' << c.detail << ": " << (c.undecided && !c.passed ? "undecided" : mark(c.passed));
    if (c.cycle) out << "  cycle " << join(*c.cycle, gl);
    for (const auto& p : c.paths) out << "  path " << join(p, gl);
    out << '\n';
  }
}

int cmd_conditions_g(const ConditionArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  if (a.ab.empty() != a.cd.empty()) throw UsageError("give both --ab and --cd, or neither to search");
  if (a.ab.empty()) {
    auto found = find_dot_labels_g(g, 0, gl.options());
    for (const auto& q : found) out << "ab=" << gl.out(q[0]) << "," << gl.out(q[1]) << " cd=" << gl.out(q[2]) << "," << gl.out(q[3]) << '\n';
    out << found.size() << " edge pairs satisfy (i)-(iii)\n";
    return a.expect.apply(!found.empty(), false);
  }
  auto ab = parse_labels(a.ab, 2, gl, "--ab");
  auto cd = parse_labels(a.cd, 2, gl, "--cd");
  auto r = check_dot_conditions_g(g, ab[0], ab[1], cd[0], cd[1], gl.options());
  print_report(r, {"(i)", "(ii)", "(iii)"}, a.verbose, gl, out);
  return a.expect.apply(r.passed, r.undecided);
}

int cmd_conditions_h(const ConditionArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph h = resolve_graph(a.graph, in);
  if (a.xy.empty()) {
    auto found = find_dot_labels_h(h, 0, gl.options());
    for (const auto& e : found) out << "xy=" << gl.out(e.u) << "," << gl.out(e.v) << '\n';
    out << found.size() << " edges satisfy (iv)-(vi)\n";
    return a.expect.apply(!found.empty(), false);
  }
  auto xy = parse_labels(a.xy, 2, gl, "--xy");
  auto r = check_dot_conditions_h(h, xy[0], xy[1], std::nullopt, gl.options());
  print_report(r, {"(iv)", "(v)", "(vi)"}, a.verbose, gl, out);
  return a.expect.apply(r.passed, r.undecided);
}

int cmd_conditions_bullets(const ConditionArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  if (a.ab.empty() || a.cd.empty()) throw UsageError("--ab and --cd are required");
  auto ab = parse_labels(a.ab, 2, gl, "--ab");
  auto cd = parse_labels(a.cd, 2, gl, "--cd");
  if (a.xy.empty()) {
    auto found = find_iterative_edges(g, ab[0], ab[1], cd[0], cd[1], 0, gl.options());
    for (const auto& e : found) out << "xy=" << gl.out(e.u) << "," << gl.out(e.v) << '\n';
    out << found.size() << " edges satisfy the three bullets\n";
    return a.expect.apply(!found.empty(), false);
  }
  auto xy = parse_labels(a.xy, 2, gl, "--xy");
  auto r = check_iterative_bullets(g, ab[0], ab[1], cd[0], cd[1], xy[0], xy[1], gl.options());
  print_report(r, {"bullet 1", "bullet 2", "bullet 3"}, a.verbose, gl, out);
  return a.expect.apply(r.passed, r.undecided);
}

// ---------------------------------------------------------------- extendable

struct ExtendableArgs {
  std::string graph;
  std::string certificate;
  bool verbose = false;
  ExpectArg expect;
};

int cmd_extendable(const ExtendableArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  auto t0 = std::chrono::steady_clock::now();
  auto cycles = find_extendable_5_cycles(g, gl.options());
  for (const auto& c : cycles) {
    out << join({c.cycle.begin(), c.cycle.end()}, gl) << '\n';
    if (a.verbose) {
      for (const auto& w : c.witnesses) out << "  G-" << gl.out(w.deleted) << ": " << join(w.cycle, gl) << '\n';
    }
  }
  out << cycles.size() << " extendable 5-cycles\n";
  if (!a.certificate.empty()) write_json(certify_extendable(g, cycles, ms_since(t0)), a.certificate, out);
  return a.expect.apply(!cycles.empty(), false);
}

// ---------------------------------------------------------------- grinberg

struct GrinbergArgs {
  std::string embedding;
  std::string chord;
  std::string cycle;
  bool all_cycles = false;
  ExpectArg expect;
};

Embedding resolve_embedding(const std::string& spec, std::istream& in) {
  if (spec == "j18") return Embedding::from_coordinates(named::j18(), named::j18_coordinates());
  if (spec == "dodecahedron") {
    return Embedding::from_coordinates(named::dodecahedron(), named::dodecahedron_coordinates());
  }
  if (spec == "k4") return Embedding::make(named::complete(4), {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
  if (spec == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_embedding(ss.str());
  }
  return decode_embedding(slurp(spec));
}

int cmd_grinberg(const GrinbergArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Embedding emb = resolve_embedding(a.embedding, in);
  FaceSet fs = faces(emb);
  if (!a.chord.empty()) {
    auto uv = parse_labels(a.chord, 2, gl, "--chord");
    int face = -1;
    for (int f = 0; f < fs.count(); ++f) {
      const auto& w = fs.walks[f];
      bool has_u = std::find(w.begin(), w.end(), uv[0]) != w.end();
      bool has_v = std::find(w.begin(), w.end(), uv[1]) != w.end();
      if (has_u && has_v && (face < 0 || fs.size(f) > fs.size(face))) face = f;
    }
    if (face < 0) throw PreconditionError("the chord's ends share no face");
    emb = add_chord_in_face(emb, fs, face, uv[0], uv[1]);
    fs = faces(emb);
  }
  out << "faces " << fs.count() << ":";
  for (int f = 0; f < fs.count(); ++f) out << ' ' << fs.size(f);
  out << '\n';
  bool obstruction = grinbergian_obstruction(fs);
  out << "grinbergian obstruction: " << word(obstruction) << '\n';
  bool all_zero = true;
  auto report = [&](const CycleWitness& c) {
    auto r = grinberg_sum(emb, fs, c);
    all_zero = all_zero && r.sigma == 0 && r.consistent;
    return r;
  };
  if (!a.cycle.empty()) {
    auto c = parse_labels(a.cycle, 0, gl, "--cycle");
    auto r = report(c);
    out << "sigma " << r.sigma << (r.consistent ? "" : " (inconsistent sides)") << '\n';
  }
  if (a.all_cycles) {
    std::size_t count = 0;
    for_each_hamiltonian_cycle(emb.graph(), {}, [&](std::span<const int> c) {
      ++count;
      report(CycleWitness(c.begin(), c.end()));
      return false;
    });
    out << count << " hamiltonian cycles, sigma = 0 for " << (all_zero ? "all" : "not all") << '\n';
  }
  bool verdict = (a.cycle.empty() && !a.all_cycles) ? obstruction : all_zero;
  return a.expect.apply(verdict, false);
}

// ---------------------------------------------------------------- named / certify / replay

struct NamedArgs {
  std::string name;
  bool list = false;
  std::string format = "g6";
};

int cmd_named(const NamedArgs& a, std::ostream& out) {
  if (a.list || a.name.empty()) {
    for (const auto& n : named::catalog()) out << n << '\n';
    return kExitOk;
  }
  emit_graph(named::by_name(a.name), a.format, out);
  return kExitOk;
}

struct CertifyArgs {
  std::string graph;
  std::string claim;
  std::string outer;
  std::string output = "-";
};

int cmd_certify(const CertifyArgs& a, const Globals& gl, std::istream& in, std::ostream& out) {
  Graph g = resolve_graph(a.graph, in);
  auto t0 = std::chrono::steady_clock::now();
  auto o = gl.options();
  Json cert;
  bool undecided = false;
  if (is_certifiable(a.claim)) {
    auto r = certifiable_report(a.claim, g, o);
    undecided = r.undecided;
    cert = certify_predicate(g, a.claim, r, ms_since(t0));
  } else if (a.claim == "extendable") {
    cert = certify_extendable(g, find_extendable_5_cycles(g, o), ms_since(t0));
  } else if (a.claim == "cell-suitable" || a.claim == "cell-k1" || a.claim == "cell-k2") {
    Cell cell(g, outer_for(a.graph, a.outer, gl));
    CellVerdict v = a.claim == "cell-k1" ? check_k1_cell(cell, o)
                                         : (a.claim == "cell-k2" ? check_k2_cell(cell, o) : check_suitable(cell, o));
    undecided = v.undecided;
    cert = certify_cell(cell, a.claim, v, ms_since(t0));
  } else {
    throw UsageError("unknown claim '" + a.claim + "'");
  }
  write_json(cert, a.output, out);
  return undecided ? kExitUndecided : kExitOk;
}

int cmd_replay(const std::string& path, std::istream& in, std::ostream& out) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = slurp(path);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate is not JSON: ") + e.what());
  }
  ReplayReport r = replay_certificate(j);
  for (const auto& e : r.errors) out << "error: " << e << '\n';
  out << "replay " << (r.ok ? "ok" : "FAILED") << ": " << r.checked << " witnesses checked, " << r.asserted
      << " facts asserted without witness\n";
  return r.ok ? kExitOk : kExitFalse;
}

void add_expect(CLI::App* app, ExpectArg& e) {
  app->add_option("--expect", e.value, "Exit with status 1 unless the verdict equals this")
      ->check(CLI::IsMember({"true", "false"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonicity toolkit: K1/K2-hamiltonian and hypohamiltonian graphs, cells, constructions"};
  app.name("k2ham");
  app.require_subcommand(1);
  Globals gl;
  app.add_option("-j,--jobs", gl.jobs, "Worker threads (default: $K2HAM_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--node-limit", gl.node_limit, "Search node budget per search; 0 = unlimited");
  app.add_flag("--one-based", gl.one_based, "Vertex labels on the command line and in output start at 1");

  FilterArgs fa;
  auto* filter = app.add_subcommand("filter", "Filter a graph6/sparse6 stream by a predicate");
  filter->add_option("-p,--pred", fa.pred, "Predicate (hamiltonian, k2hypo, girth>=5, ...)")->required();
  filter->add_flag("--not", fa.negate, "Keep graphs failing the predicate");
  filter->add_flag("--count", fa.count, "Print only the number of survivors");
  filter->add_flag("--certificates", fa.certificates, "Print one JSON certificate per survivor instead of the graph")
      ->excludes("--count");
  filter->add_flag("--strict", fa.strict, "Stop at the first malformed line; undecided graphs give exit 5");
  filter->add_flag("-q,--quiet", fa.quiet, "No summary on standard error");
  filter->add_option("-i,--input", fa.input, "Input file (default: standard input)");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Evaluate one predicate on one graph");
  check->add_option("graph", ca.graph, "Catalog name, graph6/sparse6 string, file, or - for stdin")->required();
  check->add_option("-p,--pred", ca.pred, "Predicate")->required();
  check->add_option("-c,--certificate", ca.certificate, "Write a JSON certificate (- for stdout)");
  check->add_flag("-v,--verbose", ca.verbose, "Print witnesses");
  add_expect(check, ca.expect);

  CellArgs cea;
  auto* cell = app.add_subcommand("cell", "Cells: verify a labelling or find all");
  cell->require_subcommand(1);
  auto* verify = cell->add_subcommand("verify", "Check properties of one cell");
  verify->add_option("graph", cea.graph)->required();
  verify->add_option("--outer", cea.outer, "a,b,c,d (default for j18: its figure cell)");
  verify->add_option("--level", cea.level)->check(CLI::IsMember({"suitable", "k1", "k2"}));
  verify->add_flag("--ledger", cea.ledger, "Print every property check");
  verify->add_option("-c,--certificate", cea.certificate, "Write a JSON certificate (- for stdout)");
  add_expect(verify, cea.expect);
  auto* find = cell->add_subcommand("find", "All outer labellings forming a cell");
  find->add_option("graph", cea.graph)->required();
  find->add_option("--level", cea.level)->check(CLI::IsMember({"suitable", "k1", "k2"}));
  find->add_flag("--raw", cea.raw, "Every labelling instead of one per relabelling orbit");

  BuildArgs ba;
  auto* build = app.add_subcommand("build", "Constructions (graph6 on standard output)");
  build->require_subcommand(1);
  build->add_option("--format", ba.format, "g6, s6 or edges")->check(CLI::IsMember({"g6", "s6", "edges"}));
  auto* gamma = build->add_subcommand("gamma", "Cyclic identification of an odd number of cells");
  gamma->add_option("--cells", ba.cells, "Comma-separated graphs (default outer labelling)")->delimiter(',');
  gamma->add_option("--cell", ba.cell, "GRAPH@a,b,c,d; repeatable");
  gamma->add_option("--variant", ba.variant)->check(CLI::IsMember({"k1", "k2"}));
  gamma->add_flag("--no-verify", ba.no_verify, "Skip the per-cell check");
  auto* gluec = build->add_subcommand("glue", "Identify the attachments of two 3-fragments");
  gluec->add_option("--first", ba.first)->required();
  gluec->add_option("--first-vertex", ba.first_vertex, "Cubic vertex whose neighbourhood is the cut")->required();
  gluec->add_flag("--first-trivial", ba.first_trivial, "Use the trivial fragment at that vertex");
  gluec->add_option("--second", ba.second)->required();
  gluec->add_option("--second-vertex", ba.second_vertex)->required();
  gluec->add_flag("--second-trivial", ba.second_trivial);
  auto* dot = build->add_subcommand("dot", "Dot product G.H");
  dot->add_option("--left", ba.g, "G (edges ab, cd)")->required();
  dot->add_option("--right", ba.h, "H (edge xy)")->required();
  dot->add_option("--ab", ba.ab);
  dot->add_option("--cd", ba.cd);
  dot->add_option("--xy", ba.xy);
  dot->add_option("--primes", ba.primes, "a',b',c',d' (default: ascending neighbours)");
  dot->add_flag("--find", ba.find, "Use the first labels satisfying (i)-(vi)");

  ConditionArgs cda;
  auto* cond = app.add_subcommand("conditions", "Dot product conditions; omitted labels are searched for");
  cond->require_subcommand(1);
  auto* cg = cond->add_subcommand("g", "(i)-(iii) on G at edges ab, cd");
  auto* ch = cond->add_subcommand("h", "(iv)-(vi) on H at edge xy");
  auto* cb = cond->add_subcommand("bullets", "Iteration hypotheses on G at edge xy");
  for (auto* c : {cg, ch, cb}) {
    c->add_option("graph", cda.graph)->required();
    c->add_flag("-v,--verbose", cda.verbose);
    add_expect(c, cda.expect);
  }
  for (auto* c : {cg, cb}) {
    c->add_option("--ab", cda.ab);
    c->add_option("--cd", cda.cd);
  }
  for (auto* c : {ch, cb}) c->add_option("--xy", cda.xy);

  ExtendableArgs ea;
  auto* ext = app.add_subcommand("extendable", "Extendable 5-cycles");
  ext->add_option("graph", ea.graph)->required();
  ext->add_option("-c,--certificate", ea.certificate);
  ext->add_flag("-v,--verbose", ea.verbose);
  add_expect(ext, ea.expect);

  GrinbergArgs ga;
  auto* grin = app.add_subcommand("grinberg", "Faces, Grinberg sums and the mod-3 obstruction");
  grin->add_option("embedding", ga.embedding, "j18, dodecahedron, k4, an embedding file or -")->required();
  grin->add_option("--chord", ga.chord, "u,v: add this edge inside the largest face containing both");
  grin->add_option("--cycle", ga.cycle, "Hamiltonian cycle to evaluate");
  grin->add_flag("--all-cycles", ga.all_cycles, "Evaluate every hamiltonian cycle");
  add_expect(grin, ga.expect);

  NamedArgs na;
  auto* nm = app.add_subcommand("named", "Print a catalog graph");
  nm->add_option("name", na.name);
  nm->add_flag("--list", na.list);
  nm->add_option("--format", na.format)->check(CLI::IsMember({"g6", "s6", "edges"}));

  CertifyArgs cfa;
  auto* cert = app.add_subcommand("certify", "Write a self-validating JSON certificate");
  cert->add_option("graph", cfa.graph)->required();
  cert->add_option("--claim,--pred", cfa.claim, "hamiltonian, k1, k2, hypo, k2hypo, extendable, cell-suitable, cell-k1, cell-k2")
      ->required();
  cert->add_option("--outer", cfa.outer);
  cert->add_option("-o,--output", cfa.output);

  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Validate a certificate without searching");
  rep->add_option("certificate", replay_path)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (filter->parsed()) return cmd_filter(fa, gl, in, out, err);
    if (check->parsed()) return cmd_check(ca, gl, in, out);
    if (verify->parsed()) return cmd_cell_verify(cea, gl, in, out);
    if (find->parsed()) return cmd_cell_find(cea, gl, in, out);
    if (gamma->parsed()) return cmd_build_gamma(ba, gl, in, out, err);
    if (gluec->parsed()) return cmd_build_glue(ba, gl, in, out, err);
    if (dot->parsed()) return cmd_build_dot(ba, gl, in, out, err);
    if (cg->parsed()) return cmd_conditions_g(cda, gl, in, out);
    if (ch->parsed()) return cmd_conditions_h(cda, gl, in, out);
    if (cb->parsed()) return cmd_conditions_bullets(cda, gl, in, out);
    if (ext->parsed()) return cmd_extendable(ea, gl, in, out);
    if (grin->parsed()) return cmd_grinberg(ga, gl, in, out);
    if (nm->parsed()) return cmd_named(na, out);
    if (cert->parsed()) return cmd_certify(cfa, gl, in, out);
    if (rep->parsed()) return cmd_replay(replay_path, in, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace k2ham::cli
