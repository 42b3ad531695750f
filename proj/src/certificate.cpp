#include "k2ham/certificate.hpp"

#include <algorithm>
#include <set>

#include "k2ham/error.hpp"
#include "k2ham/formats.hpp"

namespace k2ham {

namespace {

Json edges_json(const std::vector<Edge>& es) {
  Json out = Json::array();
  for (const Edge& e : es) out.push_back({e.u, e.v});
  return out;
}

Json header(const Graph& g, std::string_view claim, bool verdict, double elapsed_ms) {
  return {{"format", "k2ham-certificate"},
          {"version", kCertificateVersion},
          {"tool", kToolVersion},
          {"graph6", encode_graph6(g)},
          {"order", g.order()},
          {"claim", claim},
          {"verdict", verdict},
          {"elapsed_ms", elapsed_ms}};
}

Json query_json(const PairQuery& q) {
  Json ends = Json::array();
  ends.push_back({q.first.first, q.first.second});
  if (q.second) ends.push_back({q.second->first, q.second->second});
  return {{"deleted", q.deleted},
          {"ends", ends},
          {"required", edges_json(q.constraints.required)},
          {"forbidden", edges_json(q.constraints.forbidden)}};
}

}  // namespace

Json certify_predicate(const Graph& g, std::string_view claim, const PredicateReport& rep, double elapsed_ms) {
  Json cert = header(g, claim, rep.verdict, elapsed_ms);
  cert["undecided"] = rep.undecided;
  Json ws = Json::array();
  for (const auto& w : rep.witnesses) ws.push_back({{"deleted", w.deleted}, {"cycle", w.cycle}});
  cert["witnesses"] = ws;
  if (rep.counterexample) {
    Json ce{{"deleted", *rep.counterexample}};
    if (rep.counter_witness) ce["cycle"] = *rep.counter_witness;
    cert["counterexample"] = ce;
  }
  return cert;
}

Json certify_extendable(const Graph& g, const std::vector<ExtendableCycle>& cycles, double elapsed_ms) {
  Json cert = header(g, "extendable", !cycles.empty(), elapsed_ms);
  Json list = Json::array();
  for (const auto& c : cycles) {
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
      ws.push_back({{"deleted", {w.deleted}},
                    {"required", edges_json(w.constraints.required)},
                    {"forbidden", edges_json(w.constraints.forbidden)},
                    {"cycle", w.cycle}});
    }
    list.push_back({{"cycle", c.cycle}, {"witnesses", ws}});
  }
  cert["cycles"] = list;
  return cert;
}

Json certify_cell(const Cell& cell, std::string_view claim, const CellVerdict& v, double elapsed_ms) {
  bool verdict = claim == "cell-k1" ? v.k1 : (claim == "cell-k2" ? v.k2 : v.suitable);
  Json cert = header(cell.graph(), claim, verdict, elapsed_ms);
  cert["outer"] = cell.outer();
  cert["undecided"] = v.undecided;
  Json ledger = Json::array();
  for (const auto& c : v.ledger) {
    Json e = query_json(c.query);
    e["property"] = c.property;
    e["trigger"] = c.trigger;
    e["expect"] = c.expect_good ? "good" : "bad";
    e["passed"] = c.passed;
    if (!c.paths.empty()) e["paths"] = c.paths;
    ledger.push_back(e);
  }
  cert["ledger"] = ledger;
  return cert;
}

namespace {

std::vector<Edge> parse_edges(const Json& j) {
  std::vector<Edge> out;
  if (j.is_null()) return out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

// Every vertex outside `deleted` exactly once, consecutive (cyclically)
// adjacent, required edges used, forbidden edges avoided.
bool cycle_ok(const Graph& g, const std::vector<int>& deleted, const std::vector<int>& cyc,
              const std::vector<Edge>& required, const std::vector<Edge>& forbidden) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : deleted) {
    if (v < 0 || v >= n) return false;
    seen[v] = 2;
  }
  for (int v : cyc) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0 || cyc.size() < 3) return false;
  std::set<Edge> used;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    int u = cyc[i];
    int w = cyc[(i + 1) % cyc.size()];
    if (!g.has_edge(u, w)) return false;
    used.emplace(u, w);
  }
  for (const Edge& e : required) {
    if (!used.count(e)) return false;
  }
  for (const Edge& e : forbidden) {
    if (used.count(e)) return false;
  }
  return true;
}

bool paths_ok(const Graph& g, const Json& entry) {
  PairQuery q;
  q.deleted = entry.at("deleted").get<std::vector<int>>();
  const auto& ends = entry.at("ends");
  q.first = {ends.at(0).at(0).get<int>(), ends.at(0).at(1).get<int>()};
  if (ends.size() > 1) q.second = EndpointPair{ends.at(1).at(0).get<int>(), ends.at(1).at(1).get<int>()};
  q.constraints.required = parse_edges(entry.value("required", Json()));
  q.constraints.forbidden = parse_edges(entry.value("forbidden", Json()));
  return replay(g, q, entry.at("paths").get<std::vector<PathWitness>>());
}

}  // namespace

ReplayReport replay_certificate(const Json& cert) {
  ReplayReport rep;
  auto fail = [&](std::string msg) { rep.errors.push_back(std::move(msg)); };
  try {
    if (cert.at("format") != "k2ham-certificate") fail("unknown format");
    if (cert.at("version").get<int>() != kCertificateVersion) fail("unsupported version");
    Graph g = decode_graph_line(cert.at("graph6").get<std::string>());
    const std::string claim = cert.at("claim").get<std::string>();
    const bool verdict = cert.at("verdict").get<bool>();

    if (claim == "hamiltonian" || claim == "k1" || claim == "k2" || claim == "hypo" || claim == "k2hypo") {
      std::set<std::vector<int>> covered;
      for (const auto& w : cert.at("witnesses")) {
        auto del = w.at("deleted").get<std::vector<int>>();
        std::sort(del.begin(), del.end());
        ++rep.checked;
        if (!cycle_ok(g, del, w.at("cycle").get<std::vector<int>>(), {}, {})) {
          fail("witness for deletion of " + Json(del).dump() + " does not replay");
        }
        covered.insert(del);
      }
      if (verdict) {
        if (claim == "k1" || claim == "hypo") {
          for (int v = 0; v < g.order(); ++v) {
            if (!covered.count({v})) fail("no witness for deleting " + std::to_string(v));
          }
        } else if (claim == "k2" || claim == "k2hypo") {
          for (const Edge& e : g.edges()) {
            if (!covered.count({e.u, e.v})) fail("no witness for deleting edge " + Json({e.u, e.v}).dump());
          }
        } else if (!covered.count({})) {
          fail("no hamiltonian cycle given");
        }
        if (claim == "hypo" || claim == "k2hypo") ++rep.asserted;
      } else if (cert.contains("counterexample")) {
        const auto& ce = cert["counterexample"];
        if (ce.contains("cycle")) {
          ++rep.checked;
          if (!cycle_ok(g, ce.at("deleted").get<std::vector<int>>(), ce["cycle"].get<std::vector<int>>(), {}, {})) {
            fail("counterexample cycle does not replay");
          }
        } else {
          ++rep.asserted;
        }
      }
    } else if (claim == "extendable") {
      for (const auto& c : cert.at("cycles")) {
        auto cyc = c.at("cycle").get<std::vector<int>>();
        if (cyc.size() != 5) fail("extendable cycle must have five vertices");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
          if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) fail("listed 5-cycle is not a cycle");
          if (g.degree(cyc[i]) != 3) fail("5-cycle vertex is not cubic");
        }
        if (c.at("witnesses").size() != 10) fail("an extendable cycle needs ten witnesses");
        for (const auto& w : c.at("witnesses")) {
          ++rep.checked;
          if (!cycle_ok(g, w.at("deleted").get<std::vector<int>>(), w.at("cycle").get<std::vector<int>>(),
                        parse_edges(w.at("required")), parse_edges(w.at("forbidden")))) {
            fail("extension witness does not replay");
          }
        }
      }
    } else if (claim.rfind("cell-", 0) == 0) {
      for (const auto& e : cert.at("ledger")) {
        if (e.contains("paths")) {
          ++rep.checked;
          if (!paths_ok(g, e)) fail("property " + e.at("property").get<std::string>() + " witness does not replay");
        } else if (e.at("passed").get<bool>()) {
          ++rep.asserted;
        }
      }
    } else {
      fail("unknown claim " + claim);
    }
  } catch (const Json::exception& ex) {
    fail(std::string("malformed certificate: ") + ex.what());
  } catch (const Error& ex) {
    fail(std::string("malformed certificate: ") + ex.what());
  }
  rep.ok = rep.errors.empty();
  return rep;
}

}  // namespace k2ham
