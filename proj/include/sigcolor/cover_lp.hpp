#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigcolor/rational.hpp"
#include "sigcolor/set_family.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

struct WeightedSet {
  VertexSet set;
  Rational weight;
};

/// Optimum of the fractional covering LP
///
///     min sum_S w_S   s.t.  sum_{S contains v} w_S >= 1 for every v,  w >= 0
///
/// together with a primal solution (nonzero weights only) and a dual
/// solution y (one entry per vertex) with sum_{v in S} y_v <= 1 for every S.
struct LpResult {
  Rational optimum;
  std::vector<WeightedSet> primal;
  std::vector<Rational> dual;
};

struct LpCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool strong_duality = false;
  std::string detail;

  bool ok() const { return primal_feasible && dual_feasible && strong_duality; }
};

/// Solves the covering LP exactly. Throws PreconditionError when some vertex
/// lies in no set (infeasible) or the family is empty.
LpResult fractional_cover_optimum(const SignedGraph& host, std::span<const VertexSet> sets);
LpResult fractional_cover_optimum(const SetFamily& family);

/// Rechecks both certificates with rational arithmetic only. Dual
/// feasibility is checked against `sets`.
LpCheck verify_lp_result(const SignedGraph& host, std::span<const VertexSet> sets,
                         const LpResult& result);

/// Fractional balanced chromatic number over maximal balanced sets.
LpResult chi_fb(const SignedGraph& g, unsigned threads = 1);
/// Fractional (vertex) arboricity over maximal acyclic sets.
LpResult a_f(const SignedGraph& g, unsigned threads = 1);

struct ColumnGenerationOptions {
  /// Branch-and-bound node budget per pricing round; 0 means unlimited.
  std::size_t pricing_node_limit = 0;
  /// Wall-clock budget for the whole run; zero means unlimited.
  std::chrono::milliseconds time_budget{0};
};

struct ColumnGenerationResult {
  bool converged = false;
  /// Valid bounds on the optimum; equal when converged.
  Rational lower;
  Rational upper;
  /// Final restricted-master solution (primal feasible for the full LP).
  LpResult master;
  std::size_t rounds = 0;
  std::size_t columns = 0;
};

/// Restricted master over a growing column set, starting from singletons;
/// pricing finds a maximum dual-weight set with the property by
/// branch-and-bound and adds it (extended to a maximal set) while its
/// weight exceeds 1.
ColumnGenerationResult column_generation(const SignedGraph& g, SetProperty property,
                                         const ColumnGenerationOptions& options = {});

struct PricingResult {
  VertexSet best;
  Rational best_weight;
  /// Upper bound on the maximum weight; equals best_weight when complete.
  Rational upper_bound;
  bool complete = true;
  std::size_t nodes = 0;
};

/// Maximum of sum_{v in S} weight[v] over sets S with the property.
PricingResult max_weight_set(const SignedGraph& g, SetProperty property,
                             std::span<const Rational> weight, std::size_t node_limit = 0);

}  // namespace sigcolor
