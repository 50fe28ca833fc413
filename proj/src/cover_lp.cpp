#include "sigcolor/cover_lp.hpp"

#include <algorithm>
#include <numeric>

#include "sigcolor/detail/grower.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/simplex.hpp"

namespace sigcolor {

LpResult fractional_cover_optimum(const SignedGraph& host, std::span<const VertexSet> sets) {
  const std::size_t n = host.vertex_count();
  if (sets.empty()) throw PreconditionError("cover LP: empty set family");
  std::vector<char> covered(n, 0);
  for (const auto& s : sets) {
    for (VertexId v : s) {
      if (v >= n) throw PreconditionError("cover LP: set member outside the host");
      covered[v] = 1;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!covered[v]) {
      throw PreconditionError("cover LP: vertex '" + host.name(static_cast<VertexId>(v)) +
                              "' lies in no set (infeasible)");
    }
  }

  // Solve the packing dual  max sum y  s.t.  y(S) <= 1;  its row duals are
  // the covering weights.
  std::vector<std::vector<Rational>> a(sets.size(), std::vector<Rational>(n));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (VertexId v : sets[i]) a[i][v] = 1;
  }
  DenseSimplex<Rational> simplex(std::move(a), std::vector<Rational>(sets.size(), Rational(1)),
                                 std::vector<Rational>(n, Rational(1)));
  auto sol = simplex.solve();
  if (sol.status != DenseSimplex<Rational>::Status::kOptimal) {
    throw std::logic_error("cover LP: packing dual unbounded despite full coverage");
  }

  LpResult result;
  result.optimum = sol.objective;
  result.dual = std::move(sol.x);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sol.duals[i] != 0) result.primal.push_back({sets[i], sol.duals[i]});
  }
  const LpCheck check = verify_lp_result(host, sets, result);
  if (!check.ok()) throw std::logic_error("cover LP: certificate check failed: " + check.detail);
  return result;
}

LpResult fractional_cover_optimum(const SetFamily& family) {
  return fractional_cover_optimum(family.host, family.sets);
}

LpCheck verify_lp_result(const SignedGraph& host, std::span<const VertexSet> sets,
                         const LpResult& result) {
  LpCheck check;
  const std::size_t n = host.vertex_count();

  std::vector<Rational> coverage(n);
  Rational primal_total = 0;
  check.primal_feasible = true;
  for (const auto& ws : result.primal) {
    if (ws.weight < 0) {
      check.primal_feasible = false;
      check.detail += "negative primal weight; ";
    }
    primal_total += ws.weight;
    for (VertexId v : ws.set) {
      if (v >= n) {
        check.primal_feasible = false;
        continue;
      }
      coverage[v] += ws.weight;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (coverage[v] < 1) {
      check.primal_feasible = false;
      check.detail += "vertex '" + host.name(static_cast<VertexId>(v)) + "' undercovered; ";
    }
  }

  check.dual_feasible = result.dual.size() == n;
  Rational dual_total = 0;
  if (check.dual_feasible) {
    for (const auto& y : result.dual) {
      if (y < 0) check.dual_feasible = false;
      dual_total += y;
    }
    for (const auto& s : sets) {
      Rational load = 0;
      for (VertexId v : s) load += result.dual[v];
      if (load > 1) {
        check.dual_feasible = false;
        check.detail += "dual overloads a set; ";
        break;
      }
    }
  } else {
    check.detail += "dual has the wrong length; ";
  }

  check.strong_duality = primal_total == result.optimum && dual_total == result.optimum;
  if (!check.strong_duality) check.detail += "primal/dual totals differ from optimum; ";
  return check;
}

namespace {

LpResult solve_over_maximal(const SignedGraph& g, SetProperty property, unsigned threads) {
  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.threads = threads;
  return fractional_cover_optimum(enumerate_sets(g, property, opts));
}

}  // namespace

LpResult chi_fb(const SignedGraph& g, unsigned threads) {
  return solve_over_maximal(g, SetProperty::kBalanced, threads);
}

LpResult a_f(const SignedGraph& g, unsigned threads) {
  return solve_over_maximal(g, SetProperty::kAcyclic, threads);
}

// ---------------------------------------------------------------------------
// Pricing and column generation

namespace {

struct PricingSearch {
  detail::Grower grower;
  std::vector<VertexId> order;
  std::vector<Rational> weight;   // by position in `order`
  std::vector<Rational> suffix;   // suffix[k] = sum of weight[k..]
  std::size_t node_limit;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  Rational best = 0;
  std::vector<VertexId> best_members;
  Rational frontier = 0;
  bool aborted = false;
  std::size_t nodes = 0;

  void dfs(std::size_t k, const Rational& current) {
    if (aborted) {
      frontier = std::max(frontier, Rational(current + suffix[k]));
      return;
    }
    ++nodes;
    if ((node_limit != 0 && nodes > node_limit) ||
        (deadline && nodes % 1024 == 0 && std::chrono::steady_clock::now() > *deadline)) {
      aborted = true;
      frontier = std::max(frontier, Rational(current + suffix[k]));
      return;
    }
    if (current + suffix[k] <= best) return;
    if (k == order.size()) {
      best = current;
      best_members = grower.members();
      return;
    }
    if (grower.try_add(order[k])) {
      dfs(k + 1, current + weight[k]);
      grower.remove_last();
    }
    dfs(k + 1, current);
  }
};

PricingResult price(const SignedGraph& g, SetProperty property, std::span<const Rational> weight,
                    std::size_t node_limit,
                    std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (weight.size() != g.vertex_count()) {
    throw PreconditionError("pricing: one weight per vertex required");
  }
  std::vector<VertexId> order;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (weight[v] > 0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return weight[a] > weight[b]; });

  PricingSearch search{detail::Grower(g, property), order, {}, {}, node_limit, deadline,
                      Rational(0), {}, Rational(0), false, 0};
  for (VertexId v : order) search.weight.push_back(weight[v]);
  search.suffix.assign(order.size() + 1, Rational(0));
  for (std::size_t k = order.size(); k-- > 0;) {
    search.suffix[k] = search.suffix[k + 1] + search.weight[k];
  }
  search.dfs(0, Rational(0));

  PricingResult out;
  out.best = VertexSet(search.best_members);
  out.best_weight = search.best;
  out.complete = !search.aborted;
  out.upper_bound = out.complete ? search.best : std::max(search.best, search.frontier);
  out.nodes = search.nodes;
  return out;
}

}  // namespace

PricingResult max_weight_set(const SignedGraph& g, SetProperty property,
                             std::span<const Rational> weight, std::size_t node_limit) {
  return price(g, property, weight, node_limit, std::nullopt);
}

ColumnGenerationResult column_generation(const SignedGraph& g, SetProperty property,
                                         const ColumnGenerationOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::size_t n = g.vertex_count();
  if (n == 0) throw PreconditionError("column generation: empty graph");

  std::vector<VertexSet> columns;
  for (VertexId v = 0; v < n; ++v) columns.push_back(VertexSet{v});

  ColumnGenerationResult result;
  result.lower = 0;
  for (;;) {
    ++result.rounds;
    result.master = fractional_cover_optimum(g, columns);
    result.upper = result.master.optimum;

    std::optional<clock::time_point> deadline;
    if (options.time_budget.count() > 0) deadline = start + options.time_budget;
    const PricingResult priced =
        price(g, property, result.master.dual, options.pricing_node_limit, deadline);
    // y / max_S y(S) is dual feasible for the full family.
    const Rational scale = std::max(Rational(1), priced.upper_bound);
    result.lower = std::max(result.lower, Rational(result.master.optimum / scale));

    if (priced.complete && priced.best_weight <= 1) {
      result.converged = true;
      result.lower = result.upper;
      break;
    }
    if (priced.best_weight <= 1) break;  // budget hit before an improving column appeared

    detail::Grower grower(g, property);
    for (VertexId v : priced.best) grower.try_add(v);
    for (VertexId v = 0; v < n; ++v) {
      if (!grower.contains(v)) grower.try_add(v);
    }
    columns.emplace_back(grower.members());

    if (options.time_budget.count() > 0 && clock::now() - start > options.time_budget) break;
  }
  result.columns = columns.size();
  return result;
}

}  // namespace sigcolor
