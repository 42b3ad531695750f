#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "k2ham/cells.hpp"
#include "k2ham/constructions.hpp"
#include "k2ham/graph.hpp"
#include "k2ham/predicates.hpp"

namespace k2ham {

inline constexpr int kCertificateVersion = 1;
inline constexpr std::string_view kToolVersion = "k2ham 0.1.0";

using Json = nlohmann::json;

/// Claim names: "hamiltonian", "k1", "k2", "hypo", "k2hypo".
Json certify_predicate(const Graph& g, std::string_view claim, const PredicateReport& rep, double elapsed_ms);

/// Claim "extendable": every listed 5-cycle with its ten cycles.
Json certify_extendable(const Graph& g, const std::vector<ExtendableCycle>& cycles, double elapsed_ms);

/// Claim "cell-suitable" / "cell-k1" / "cell-k2" with the full ledger.
Json certify_cell(const Cell& cell, std::string_view claim, const CellVerdict& v, double elapsed_ms);

struct ReplayReport {
  bool ok = false;
  int checked = 0;
  /// Negative facts (non-hamiltonicity, bad pairs) carried by the claim;
  /// they are asserted, not witnessed, so replay cannot confirm them.
  int asserted = 0;
  std::vector<std::string> errors;
};

/// Pure checking, no search: every witness is validated against the
/// subject graph and, for K1/K2 claims, every required deletion is covered.
ReplayReport replay_certificate(const Json& cert);

}  // namespace k2ham
