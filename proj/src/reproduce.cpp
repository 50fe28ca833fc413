#include "sigcolor/reproduce.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "sigcolor/bounds.hpp"
#include "sigcolor/certificate.hpp"
#include "sigcolor/composer.hpp"
#include "sigcolor/cover_lp.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/fixtures.hpp"
#include "sigcolor/gadgets.hpp"
#include "sigcolor/set_family.hpp"

namespace sigcolor {

namespace {

class Checks {
 public:
  explicit Checks(CriterionResult& r) : r_(r) {}

  bool expect(bool ok, const std::string& what) {
    r_.checks.push_back((ok ? "ok   " : "FAIL ") + what);
    all_ = all_ && ok;
    return ok;
  }
  template <class A, class B>
  bool equal(const A& got, const B& want, const std::string& what) {
    return expect(got == want, what + " = " + str(got) + " (want " + str(want) + ")");
  }
  bool all() const { return all_; }

 private:
  template <class T>
  static std::string str(const T& v) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(v);
    } else if constexpr (std::is_same_v<T, Rational> || std::is_same_v<T, Integer>) {
      return v.get_str();
    } else {
      return std::to_string(v);
    }
  }

  CriterionResult& r_;
  bool all_ = true;
};

std::string set_names(const SignedGraph& g, const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) out += (out.size() > 1 ? "," : "") + g.name(v);
  return out + "}";
}

// --- 1 --------------------------------------------------------------------
bool uv_blocks(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  const GadgetGraph w = w_hat();
  const SignedGraph& g = w.graph;
  const std::vector<std::vector<std::string>> expected{
      {"u", "v", "x1", "x2", "x4"}, {"u", "v", "x1", "x3", "x4"}, {"u", "v", "w", "x1", "x4"},
      {"u", "v", "w", "x2"},        {"u", "v", "w", "x3"},        {"u", "v", "w", "x5"},
      {"u", "v", "x1", "x3"},       {"u", "v", "x2", "x5"},       {"u", "v", "x2", "x4"},
      {"u", "v", "x3", "x5"}};
  std::vector<VertexSet> want;
  for (const auto& names : expected) want.push_back(g.ids(names));
  std::sort(want.begin(), want.end());

  const auto family = uv_block_family(w);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const VertexSet b = g.ids(expected[i]);
    const bool listed = std::find(family.begin(), family.end(), b) != family.end();
    r.listing.push_back("B" + std::to_string(i + 1) + " = " + set_names(g, b) +
                        (listed ? "" : "  (missing)"));
  }
  c.equal(family.size(), std::size_t{10}, "sets through u,v (positive triangles kept whole)");
  c.expect(family == want, "set-for-set equality with B1..B10");

  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.must_contain = g.ids({"u", "v"});
  const auto plain = enumerate_sets(g, SetProperty::kBalanced, opts);
  c.equal(plain.sets.size(), std::size_t{8},
          "plain maximal sets through u,v (B7, B9 sit inside B2, B1)");

  const GadgetGraph wp = w_prime();
  const auto lemma = check_missing_triangle_lemma(wp);
  c.equal(wp.marked_triangles.size(), std::size_t{7}, "marked triangles on w_prime");
  c.expect(lemma.holds, "every maximal balanced set of w_prime through u,v misses a marked "
                        "triangle (" + std::to_string(lemma.maximal_sets_checked) + " sets)");
  return c.all();
}

// --- 2 --------------------------------------------------------------------
bool wheel_172(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  const Certificate cert = load_fixture(Fixture::kWheel172);
  const GadgetGraph host = fixture_host(Fixture::kWheel172);
  const VerifyReport rep = verify(host.graph, cert);
  c.expect(rep.ok, "verifier accepts the (172,85) wheel coloring");
  c.equal(rep.colors_used, std::int64_t{172}, "sum of reps");
  c.expect(std::all_of(rep.coverage.begin(), rep.coverage.end(),
                       [](const auto& e) { return e.second == 85; }),
           "coverage 85 at every vertex");
  const Integer m = m_upper_bound(BoundParams(172, 85));
  c.equal(Integer(overlap(cert, "u", "v")), Integer(7 * m), "overlap(u,v) vs 7(2p-4q)");
  c.equal(Integer(4 + 6 * overlap(cert, "u", "v")), Integer(172),
          "palette split 4 + 6*28 for the K4 host");

  const std::vector<std::pair<std::array<std::string, 3>, int>> audited{
      {{"u", "x1", "x2"}, kPositive}, {{"v", "x3", "x4"}, kPositive},
      {{"w", "x1", "x2"}, kNegative}, {{"w", "x3", "x4"}, kNegative},
      {{"z", "x2", "x3"}, kNegative}, {{"t", "x4", "x5"}, kNegative}};
  for (const auto& [t, sign] : audited) {
    const int actual = triangle_sign(host.graph, host.graph.ids({t[0], t[1], t[2]}));
    c.equal(actual, sign, "sign of " + t[0] + t[1] + t[2]);
    const std::int64_t count =
        sign == kNegative ? triangle_missing_count(cert, t) : triangle_full_count(cert, t);
    c.expect(Integer(count) <= m && triangle_property_audit(cert, t, sign, m.get_si()),
             t[0] + t[1] + t[2] + (sign == kNegative ? " missing " : " all-three ") +
                 std::to_string(count) + " <= " + m.get_str());
  }
  return c.all();
}

// --- 3 --------------------------------------------------------------------
bool wheel_83(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  for (const auto& [f, uv] : {std::pair{Fixture::kWheel83Tight, 13}, std::pair{Fixture::kWheel83, 14}}) {
    const auto& info = fixture_info(f);
    const Certificate cert = load_fixture(f);
    const GadgetGraph host = fixture_host(f);
    const VerifyReport rep = verify(host.graph, cert);
    const std::string id(info.id);
    c.expect(rep.ok, id + ": verifier accepts");
    c.equal(rep.colors_used, std::int64_t{83}, id + ": sum of reps");
    c.expect(std::all_of(rep.coverage.begin(), rep.coverage.end(),
                         [](const auto& e) { return e.second == 41; }),
             id + ": coverage 41 everywhere");
    c.equal(overlap(cert, "u", "v"), std::int64_t{uv}, id + ": overlap(u,v)");
    std::string off;
    for (const Edge& e : host.graph.edges()) {
      const auto& a = host.graph.name(e.a);
      const auto& b = host.graph.name(e.b);
      if ((a == "u" && b == "v") || (a == "v" && b == "u")) continue;
      if (overlap(cert, a, b) != 14) off += " " + a + b;
    }
    c.expect(off.empty(), id + ": every other edge shares 14 colors" + off);
  }
  return c.all();
}

// --- 4 --------------------------------------------------------------------
bool forest_52(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  const Certificate cert = load_fixture(Fixture::kForest52);
  const GadgetGraph host = fixture_host(Fixture::kForest52);
  const VerifyReport rep = verify(host.graph, cert);
  c.expect(cert.mode == CertificateMode::kForest && rep.ok, "verifier accepts (forest mode)");
  c.equal(cert.classes.size(), std::size_t{20}, "classes");
  c.expect(std::all_of(cert.classes.begin(), cert.classes.end(),
                       [&](const ColorClass& k) {
                         return is_acyclic(host.graph, host.graph.ids(k.members));
                       }),
           "every class induces a forest");
  c.equal(rep.colors_used, std::int64_t{52}, "sum of reps");
  c.expect(std::all_of(rep.coverage.begin(), rep.coverage.end(),
                       [](const auto& e) { return e.second == 25; }),
           "coverage 25 everywhere");
  for (const char* y : {"v", "z", "x1", "t"}) {
    c.equal(overlap(cert, "u", y), std::int64_t{10}, std::string("overlap(u,") + y + ")");
  }
  c.expect(arboricity_counting_check(52, 25, 10, 10), "counting inequalities at a = a_uv = 10");
  return c.all();
}

// --- 5 --------------------------------------------------------------------
bool forest_lemmas(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  const ForestLemmaReport rep = check_forest_lemmas(w_underlying());
  c.equal(rep.max_acyclic_order, std::size_t{5}, "largest induced forest");
  c.equal(rep.max_acyclic_order_with_uv, std::size_t{4}, "largest induced forest through u,v");
  c.expect(rep.order5_with_u_hits_two,
           "all " + std::to_string(rep.order5_sets_with_u) +
               " order-5 forests through u meet two of z, t, x1");
  return c.all();
}

// --- 6 --------------------------------------------------------------------
SignedGraph unsigned_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  SignedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (auto [a, b] : edges) g.add_edge(a, b, kNegative);
  return g;
}

bool exact_lp(CriterionResult& r, const ReproduceOptions& o) {
  Checks c(r);
  auto run = [&](const std::string& what, const SignedGraph& g, SetProperty prop,
                 const Rational& want) {
    const auto t0 = std::chrono::steady_clock::now();
    const LpResult res = prop == SetProperty::kBalanced ? chi_fb(g, o.threads) : a_f(g, o.threads);
    EnumerateOptions opts;
    opts.maximal_only = true;
    const auto family = enumerate_sets(g, prop, opts);
    const LpCheck check = verify_lp_result(g, family.sets, res);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.equal(res.optimum, want, what);
    c.expect(check.ok() && secs < 1.0, what + ": primal, dual and strong duality recheck" +
                                           (check.ok() ? "" : " (" + check.detail + ")"));
  };
  run("chi_fb(K3,-)", k3_minus().graph, SetProperty::kBalanced, Rational(3, 2));
  run("chi_fb(K4,-)", k4_minus().graph, SetProperty::kBalanced, Rational(2));
  run("a_f(C4)", unsigned_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), SetProperty::kAcyclic,
      Rational(4, 3));
  run("a_f(path P5)", unsigned_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
      SetProperty::kAcyclic, Rational(1));
  run("a_f(star K1,4)", unsigned_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}),
      SetProperty::kAcyclic, Rational(1));
  std::mt19937_64 rng(o.seed);
  std::vector<std::pair<int, int>> tree;
  for (int v = 1; v < 9; ++v) tree.emplace_back(static_cast<int>(rng() % v), v);
  run("a_f(random 9-vertex tree)", unsigned_graph(9, tree), SetProperty::kAcyclic, Rational(1));
  return c.all();
}

// --- 7 --------------------------------------------------------------------
bool composer_ok(Checks& c, const Composition& comp, const std::string& what, bool quiet) {
  const SignedGraph& g = comp.graph.graph;
  const VerifyReport rep = verify(g, comp.certificate);
  std::int64_t lo = 99, hi = 0;
  for (const Edge& e : g.edges()) {
    const auto k = overlap(comp.certificate, g.name(e.a), g.name(e.b));
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  const bool exact = std::all_of(rep.coverage.begin(), rep.coverage.end(),
                                 [](const auto& e) { return e.second == 41; });
  const bool ok = rep.ok && comp.certificate.p == 83 && comp.certificate.q == 41 && exact &&
                  lo >= 13 && hi <= 14;
  if (!quiet || !ok) {
    std::string line = what + ": " + std::to_string(g.vertex_count()) + " vertices, overlaps " +
                       std::to_string(lo) + ".." + std::to_string(hi) + ", colors used " +
                       std::to_string(rep.colors_used);
    for (const auto& f : rep.violations) line += "; " + f.message;
    c.expect(ok, line);
  }
  return ok;
}

bool composer(CriterionResult& r, const ReproduceOptions& o) {
  Checks c(r);
  composer_ok(c, compose_8341({}), "empty trace", false);
  BuildTrace one;
  one.steps.push_back(InnerK4Step{{"a", "b", "c"}});
  composer_ok(c, compose_8341(one), "one inner K4", false);
  composer_ok(c, compose_8341(g_hat_trace()), "substitute all edges, then fill every face",
              false);
  std::mt19937_64 rng(o.seed);
  int good = 0;
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t seed = rng();
    const std::size_t depth = 1 + rng() % 5;
    try {
      good += composer_ok(c, compose_8341(random_trace(seed, depth)),
                          "random trace " + std::to_string(k), true);
    } catch (const std::exception& e) {
      c.expect(false, "random trace " + std::to_string(k) + ": " + e.what());
    }
  }
  c.equal(good, 100, "random traces (depth 1..5) passing");
  return c.all();
}

// --- 8 --------------------------------------------------------------------
bool bounds(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  c.equal(threshold_83_41(), Rational(83, 41), "threshold from the face recurrence");
  c.equal(threshold_172_85(), Rational(172, 85), "threshold for the K4 host");
  c.equal(threshold_52_25(), Rational(52, 25), "threshold from forest counting");
  const auto f21 = first_infeasible_index(BoundParams(2, 1));
  c.expect(f21 && *f21 == 1, "first infeasible index at (2,1) is 1");
  c.expect(!first_infeasible_index(BoundParams(83, 41)), "no infeasible index at (83,41)");

  bool agree = true;
  bool dichotomy = true;
  std::size_t pairs = 0;
  for (std::int64_t q = 1; q <= 100; ++q) {
    for (std::int64_t p = 2 * q; p <= (5 * q + 1) / 2; ++p, ++pairs) {
      const BoundParams bp(p, q);
      for (unsigned i = 0; i <= 30 && agree; ++i) agree = mu_bound(bp, i) == mu_bound_recurrence(bp, i);
      // Independent check: the closed form must dip below zero within a few
      // dozen steps exactly when p/q < 83/41.
      bool negative = false;
      for (unsigned i = 0; i <= 40 && !negative; ++i) negative = mu_bound(bp, i) < 0;
      const bool below = Rational(p, q) < Rational(83, 41);
      dichotomy = dichotomy && negative == below &&
                  first_infeasible_index(bp).has_value() == below;
    }
  }
  c.expect(agree, "closed form equals recurrence for i <= 30 on all scanned pairs");
  c.expect(dichotomy, "finite / none split at 83/41 over " + std::to_string(pairs) +
                          " pairs with q <= 100");
  return c.all();
}

// --- 9 --------------------------------------------------------------------
bool simple_graph(const SignedGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.a == e.b || !seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) return false;
  }
  return true;
}

bool constructions(CriterionResult& r, const ReproduceOptions&) {
  Checks c(r);
  const std::vector<std::tuple<std::string, std::function<GadgetGraph()>, std::size_t>> builds{
      {"w_hat", w_hat, 10},          {"w_prime", w_prime, 16},
      {"w_double_prime", w_double_prime, 23}, {"K3 with copies", g_hat_k3, 66},
      {"K4 with copies", g_hat_k4, 130},       {"W1", [] { return w1_underlying(); }, 34},
      {"u_hat", u_hat, 88}};
  for (const auto& [name, make, n] : builds) {
    const GadgetGraph g = make();
    c.equal(g.graph.vertex_count(), n, name + " vertices");
    bool negative = true;
    for (const auto& t : g.marked_triangles) negative = negative && triangle_sign(g.graph, t) == kNegative;
    c.expect(negative && simple_graph(g.graph),
             name + ": " + std::to_string(g.marked_triangles.size()) +
                 " marked triangles all negative, graph simple");
  }
  c.equal(u_hat().marked_triangles.size(), std::size_t{42}, "u_hat marked triangles");
  const GadgetGraph via_trace = build_from_trace(g_hat_trace());
  c.equal(via_trace.graph.vertex_count(), std::size_t{66}, "trace form of the K3 construction");
  return c.all();
}

// --- 10 -------------------------------------------------------------------
// Reference checks written without the union-find machinery: every simple
// cycle is listed by DFS from its smallest vertex.
struct CycleOracle {
  const SignedGraph& g;
  std::uint64_t set;
  bool any = false;
  bool negative = false;

  void from(VertexId start) {
    std::vector<VertexId> path{start};
    walk(start, start, std::uint64_t{1} << start, 1, path);
  }
  void walk(VertexId start, VertexId at, std::uint64_t used, int sign,
            std::vector<VertexId>& path) {
    for (const Neighbor& nb : g.neighbors(at)) {
      if (((set >> nb.vertex) & 1U) == 0) continue;
      if (nb.vertex == start && path.size() >= 3) {
        any = true;
        if (sign * nb.sign < 0) negative = true;
        continue;
      }
      if (nb.vertex <= start || ((used >> nb.vertex) & 1U)) continue;
      path.push_back(nb.vertex);
      walk(start, nb.vertex, used | (std::uint64_t{1} << nb.vertex), sign * nb.sign, path);
      path.pop_back();
    }
  }
  static CycleOracle run(const SignedGraph& g, std::uint64_t set) {
    CycleOracle o{g, set};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if ((set >> v) & 1U) o.from(v);
    }
    return o;
  }
};

bool cycle_sound(const SignedGraph& g, const VertexSet& s, const std::vector<VertexId>& cyc,
                 int want_sign) {
  if (cyc.size() < 3) return false;
  std::set<VertexId> distinct(cyc.begin(), cyc.end());
  if (distinct.size() != cyc.size()) return false;
  int sign = 1;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (!s.contains(cyc[i])) return false;
    const auto e = g.sign(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (!e) return false;
    sign *= *e;
  }
  return want_sign == 0 || sign == want_sign;
}

bool properties(CriterionResult& r, const ReproduceOptions& o) {
  Checks c(r);
  std::mt19937_64 rng(o.seed);
  int balance = 0, acyclic = 0, heredity = 0, switching = 0, witness = 0, roundtrip = 0,
      families = 0;
  constexpr int kGraphs = 500;
  for (int k = 0; k < kGraphs; ++k) {
    const std::size_t n = 1 + rng() % 8;
    SignedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    const unsigned density = 20 + rng() % 70;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (rng() % 100 < density) g.add_edge(a, b, rng() % 2 ? kPositive : kNegative);
      }
    }
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t mask = rng() & full;
    const VertexSet s = VertexSet::from_mask(mask);
    const CycleOracle oracle = CycleOracle::run(g, mask);

    const bool bal = is_balanced(g, s);
    balance += bal == !oracle.negative;
    acyclic += is_acyclic(g, s) == !oracle.any;

    bool hered = true;
    if (bal) {
      for (VertexId v : s) {
        hered = hered && is_balanced(g, VertexSet::from_mask(mask & ~(std::uint64_t{1} << v)));
      }
    }
    heredity += hered;

    const VertexSet x = VertexSet::from_mask(rng() & full);
    switching += is_balanced(switch_at(g, x), s) == bal;

    bool sound = true;
    if (const auto w = negative_cycle_witness(g, s)) sound = !bal && cycle_sound(g, s, w->vertices, kNegative);
    if (const auto cyc = find_cycle(g, s)) sound = sound && cycle_sound(g, s, *cyc, 0);
    witness += sound;

    roundtrip += parse_graph(serialize_graph(g)) == g;

    // Maximal family against a power-set filter.
    std::vector<std::uint64_t> good;
    for (std::uint64_t m = 0; m <= full; ++m) {
      if (!CycleOracle::run(g, m).negative) good.push_back(m);
    }
    std::vector<VertexSet> want;
    for (std::uint64_t m : good) {
      const bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint64_t b) {
        return b != m && (b & m) == m;
      });
      if (maximal) want.push_back(VertexSet::from_mask(m));
    }
    std::sort(want.begin(), want.end());
    EnumerateOptions opts;
    opts.maximal_only = true;
    opts.threads = o.threads;
    families += enumerate_sets(g, SetProperty::kBalanced, opts).sets == want;
  }
  const auto report = [&](int got, const std::string& what) {
    c.equal(got, kGraphs, what);
  };
  report(balance, "balance agrees with the cycle oracle");
  report(acyclic, "acyclicity agrees with the cycle oracle");
  report(heredity, "balanced sets stay balanced after deleting a vertex");
  report(switching, "balance invariant under switching");
  report(witness, "cycle witnesses are genuine cycles of the right sign");
  report(roundtrip, "graph JSON round trip");
  report(families, "maximal balanced family equals power-set filter");
  return c.all();
}

struct Entry {
  CriterionInfo info;
  bool (*run)(CriterionResult&, const ReproduceOptions&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{1, "lemma-3.1", "ten blocks through u,v; seven-triangle lemma on w_prime", 5}, uv_blocks},
      {{2, "wheel-172", "(172,85) wheel coloring and its triangle audits", 1}, wheel_172},
      {{3, "wheel-83", "(83,41) wheel colorings with 13 / 14 shared colors", 1}, wheel_83},
      {{4, "forest-52", "(52,25) forest coloring of W", 1}, forest_52},
      {{5, "forest-lemmas", "induced forests of W by brute force", 1}, forest_lemmas},
      {{6, "exact-lp", "exact LP values with rechecked duality", 6}, exact_lp},
      {{7, "composer", "(83,41) colorings along build traces", 60}, composer},
      {{8, "bounds", "thresholds and the mu recurrence", 10}, bounds},
      {{9, "constructions", "gadget sizes, marked triangles, simplicity", 5}, constructions},
      {{10, "properties", "randomized property suites against oracles", 60}, properties},
  };
  return entries;
}

}  // namespace

std::vector<CriterionInfo> criteria() {
  std::vector<CriterionInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

int criterion_id(std::string_view key) {
  for (const auto& e : registry()) {
    if (e.info.name == key || std::to_string(e.info.id) == key) return e.info.id;
  }
  throw PreconditionError("unknown criterion '" + std::string(key) + "'");
}

CriterionResult run_criterion(int id, const ReproduceOptions& options) {
  for (const auto& e : registry()) {
    if (e.info.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.name = std::string(e.info.name);
    r.budget_seconds = e.info.budget_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = e.run(r, options);
    } catch (const std::exception& ex) {
      r.checks.push_back(std::string("FAIL exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = r.seconds < r.budget_seconds;
    if (!in_time) {
      r.checks.push_back("FAIL runtime " + std::to_string(r.seconds) + " s over budget");
    }
    r.passed = ok && in_time;
    return r;
  }
  throw PreconditionError("unknown criterion " + std::to_string(id));
}

std::vector<CriterionResult> run_all(const ReproduceOptions& options) {
  std::vector<CriterionResult> out;
  for (const auto& e : registry()) out.push_back(run_criterion(e.info.id, options));
  return out;
}

}  // namespace sigcolor
