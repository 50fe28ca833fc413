#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sigcolor/bounds.hpp"
#include "sigcolor/certificate.hpp"
#include "sigcolor/composer.hpp"
#include "sigcolor/cover_lp.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/fixtures.hpp"
#include "sigcolor/gadgets.hpp"
#include "sigcolor/reproduce.hpp"
#include "sigcolor/set_family.hpp"

using namespace sigcolor;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kGuard = 3 };

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string output;
  bool json = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::map<std::string, std::function<GadgetGraph()>>& constructions() {
  static const std::map<std::string, std::function<GadgetGraph()>> m{
      {"k3-minus", k3_minus},
      {"k4-minus", k4_minus},
      {"w-hat", w_hat},
      {"w-prime", w_prime},
      {"w-double-prime", w_double_prime},
      {"g-hat-k3", g_hat_k3},
      {"g-hat-k4", g_hat_k4},
      {"u-hat", u_hat},
      {"w", w_underlying},
      {"w1", [] { return w1_underlying(); }},
  };
  return m;
}

GadgetGraph construction(const std::string& name, int i) {
  if (name == "g-seq") return g_sequence(i);
  const auto it = constructions().find(name);
  if (it == constructions().end()) throw PreconditionError("unknown construction '" + name + "'");
  return it->second();
}

// A file path, or the name of a built-in construction when no such file exists.
SignedGraph load_graph(const std::string& ref) {
  if (!std::filesystem::exists(ref) && constructions().count(ref)) {
    return constructions().at(ref)().graph;
  }
  return parse_graph(read_file(ref));
}

// A file path, or a shipped fixture id (wheel_172_85, wheel_83_41_tight, wheel_83_41, forest_52_25).
Certificate load_certificate(const std::string& ref) {
  if (!std::filesystem::exists(ref)) {
    for (const auto& f : all_fixtures()) {
      if (f.id == ref) return load_fixture(f.fixture);
    }
  }
  return parse_certificate(read_file(ref));
}

std::vector<std::string> names_of(const SignedGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s) out.push_back(g.name(v));
  return out;
}

json gadget_json(const GadgetGraph& g) {
  json doc = json::parse(serialize_graph(g.graph));
  doc["terminals"] = json::object();
  for (const auto& [role, t] : g.terminals) doc["terminals"][role] = g.graph.name(t);
  doc["marked_triangles"] = json::array();
  for (const auto& t : g.marked_triangles) doc["marked_triangles"].push_back(names_of(g.graph, t));
  return doc;
}

json lp_json(const SignedGraph& g, const LpResult& r) {
  json primal = json::array();
  for (const auto& w : r.primal) {
    primal.push_back({{"set", names_of(g, w.set)}, {"weight", to_string(w.weight)}});
  }
  json dual = json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) dual[g.name(v)] = to_string(r.dual[v]);
  return {{"optimum", to_string(r.optimum)}, {"primal", primal}, {"dual", dual}};
}

json report_json(const VerifyReport& rep) {
  json cov = json::object();
  for (const auto& [v, k] : rep.coverage) cov[v] = k;
  json findings = json::array();
  for (const auto& f : rep.violations) {
    json e{{"kind", to_string(f.kind)}, {"message", f.message}};
    if (f.class_index) e["class_index"] = *f.class_index;
    if (!f.cycle.empty()) e["cycle"] = f.cycle;
    findings.push_back(e);
  }
  return {{"ok", rep.ok}, {"colors_used", rep.colors_used}, {"coverage", cov},
          {"findings", findings}};
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

class Output {
 public:
  explicit Output(const Globals& g) : g_(g) {}
  void emit(const json& doc) { emit_text(doc.dump(2) + "\n"); }
  void emit_text(const std::string& text) {
    if (g_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(g_.output, std::ios::binary);
    if (!out) throw PreconditionError("cannot write '" + g_.output + "'");
    out << text;
  }

 private:
  const Globals& g_;
};

int cmd_reproduce(const Globals& gl, const std::string& which, Output& out) {
  ReproduceOptions opts{gl.seed, gl.threads};
  std::vector<CriterionResult> results;
  if (which == "all") {
    results = run_all(opts);
  } else {
    results.push_back(run_criterion(criterion_id(which), opts));
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (gl.json) {
    json doc = json::array();
    for (const auto& r : results) {
      // timings are left out so repeated runs print identical bytes
      doc.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                     {"budget_seconds", r.budget_seconds}, {"checks", r.checks},
                     {"listing", r.listing}});
    }
    out.emit({{"ok", ok}, {"criteria", doc}});
  } else {
    std::ostringstream ss;
    for (const auto& r : results) {
      ss << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  ("
         << std::fixed << std::setprecision(3) << r.seconds << " s, budget "
         << r.budget_seconds << " s)\n";
      for (const auto& c : r.checks) ss << "      " << c << "\n";
      for (const auto& l : r.listing) ss << "      " << l << "\n";
    }
    if (results.size() > 1) {
      std::size_t passed = 0;
      for (const auto& r : results) passed += r.passed;
      ss << passed << "/" << results.size() << " criteria passed\n";
    }
    out.emit_text(ss.str());
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigcolor: balanced colorings of signed graphs, exact LPs and certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--seed", gl.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--threads", gl.threads, "worker threads (results do not depend on it)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", gl.output, "write the result here instead of stdout");
  app.add_flag("--json", gl.json, "machine-readable report for reproduce (other commands always emit JSON)");

  std::function<int()> action;

  // build
  auto* build = app.add_subcommand("build", "emit a construction as graph JSON");
  std::string build_name;
  int seq_i = 1;
  std::vector<std::string> build_choices{"g-seq"};
  for (const auto& [k, v] : constructions()) build_choices.push_back(k);
  build->add_option("name", build_name, "construction")->required()->check(CLI::IsMember(build_choices));
  build->add_option("--i", seq_i, "index for g-seq")->capture_default_str();
  build->callback([&] {
    action = [&] {
      Output(gl).emit(gadget_json(construction(build_name, seq_i)));
      return int(kOk);
    };
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list vertex sets with a hereditary property");
  std::string enum_graph, enum_prop = "balanced", enum_contains, enum_forbid;
  bool enum_maximal = false;
  enumerate->add_option("graph", enum_graph, "graph JSON path or construction name")->required();
  enumerate->add_option("--property", enum_prop)->check(CLI::IsMember({"balanced", "acyclic"}))->capture_default_str();
  enumerate->add_flag("--maximal", enum_maximal, "only inclusion-maximal sets");
  enumerate->add_option("--contains", enum_contains, "comma-separated vertices every set must contain");
  enumerate->add_option("--forbid", enum_forbid, "comma-separated vertices no set may contain");
  enumerate->callback([&] {
    action = [&] {
      const SignedGraph g = load_graph(enum_graph);
      EnumerateOptions opts;
      opts.maximal_only = enum_maximal;
      opts.must_contain = g.ids(split_names(enum_contains));
      opts.forbid = g.ids(split_names(enum_forbid));
      opts.threads = gl.threads;
      const SetProperty prop = enum_prop == "balanced" ? SetProperty::kBalanced : SetProperty::kAcyclic;
      const SetFamily fam = enumerate_sets(g, prop, opts);
      json sets = json::array();
      for (const auto& s : fam.sets) sets.push_back(names_of(g, s));
      Output(gl).emit({{"property", enum_prop}, {"maximal", enum_maximal},
                       {"count", fam.sets.size()}, {"sets", sets}});
      return int(kOk);
    };
  });

  // solve
  auto* solve = app.add_subcommand("solve", "exact fractional covering number");
  std::string solve_kind, solve_graph;
  bool colgen = false;
  double colgen_budget = 600;
  solve->add_option("kind", solve_kind)->required()->check(CLI::IsMember({"chi-fb", "a-f"}));
  solve->add_option("graph", solve_graph, "graph JSON path or construction name")->required();
  solve->add_flag("--column-generation", colgen, "price sets instead of enumerating them");
  solve->add_option("--time-budget", colgen_budget, "seconds for column generation")->capture_default_str();
  solve->callback([&] {
    action = [&] {
      const SignedGraph g = load_graph(solve_graph);
      const bool balanced = solve_kind == "chi-fb";
      const SetProperty prop = balanced ? SetProperty::kBalanced : SetProperty::kAcyclic;
      const CertificateMode mode = balanced ? CertificateMode::kBalanced : CertificateMode::kForest;
      if (colgen) {
        ColumnGenerationOptions opts;
        opts.time_budget = std::chrono::milliseconds(static_cast<long long>(colgen_budget * 1000));
        const auto r = column_generation(g, prop, opts);
        Output(gl).emit({{"kind", solve_kind}, {"method", "column-generation"},
                         {"converged", r.converged}, {"lower", to_string(r.lower)},
                         {"upper", to_string(r.upper)}, {"rounds", r.rounds},
                         {"columns", r.columns}, {"master", lp_json(g, r.master)}});
        return int(kOk);
      }
      const LpResult r = balanced ? chi_fb(g, gl.threads) : a_f(g, gl.threads);
      EnumerateOptions opts;
      opts.maximal_only = true;
      opts.threads = gl.threads;
      const LpCheck check = verify_lp_result(g, enumerate_sets(g, prop, opts).sets, r);
      json doc = lp_json(g, r);
      doc["kind"] = solve_kind;
      doc["method"] = "exact";
      doc["check"] = {{"primal_feasible", check.primal_feasible},
                      {"dual_feasible", check.dual_feasible},
                      {"strong_duality", check.strong_duality}};
      doc["certificate"] = json::parse(serialize_certificate(lp_to_certificate(g, r, mode)));
      Output(gl).emit(doc);
      return int(check.ok() ? kOk : kFailed);
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a (p,q)-coloring certificate");
  std::string ver_graph, ver_cert;
  verify_cmd->add_option("graph", ver_graph, "graph JSON path or construction name")->required();
  verify_cmd->add_option("certificate", ver_cert, "certificate JSON path or fixture id")->required();
  verify_cmd->callback([&] {
    action = [&] {
      const SignedGraph g = load_graph(ver_graph);
      const VerifyReport rep = verify(g, load_certificate(ver_cert));
      Output(gl).emit(report_json(rep));
      return int(rep.ok ? kOk : kFailed);
    };
  });

  // compose-8341
  auto* compose = app.add_subcommand("compose-8341", "(83,41)-coloring along a build trace");
  std::string trace_path, base_profile = "14-14-14";
  int random_depth = -1;
  compose->add_option("--trace", trace_path, "trace JSON (default: the empty trace on K3)");
  compose->add_option("--random-depth", random_depth, "use a random trace of this depth (seeded)");
  compose->add_option("--base", base_profile)->check(CLI::IsMember({"14-14-14", "14-14-13", "14-13-13"}))->capture_default_str();
  compose->add_flag_callback("--g-hat", [&] { trace_path = "@g-hat"; }, "the K3 trace with every edge substituted");
  compose->callback([&] {
    action = [&] {
      BuildTrace trace;
      if (trace_path == "@g-hat") trace = g_hat_trace();
      else if (!trace_path.empty()) trace = parse_trace(read_file(trace_path));
      else if (random_depth >= 0) trace = random_trace(gl.seed, static_cast<std::size_t>(random_depth));
      const BaseProfile base = base_profile == "14-14-14"   ? BaseProfile::k14_14_14
                               : base_profile == "14-14-13" ? BaseProfile::k14_14_13
                                                            : BaseProfile::k14_13_13;
      const Composition c = compose_8341(trace, base);
      const VerifyReport rep = verify(c.graph.graph, c.certificate);
      Output(gl).emit({{"trace", json::parse(serialize_trace(trace))},
                       {"graph", gadget_json(c.graph)},
                       {"certificate", json::parse(serialize_certificate(c.certificate))},
                       {"verify", report_json(rep)}});
      return int(rep.ok ? kOk : kFailed);
    };
  });

  // audit-triangle
  auto* audit = app.add_subcommand("audit-triangle", "count colors missing / covering a triangle");
  std::string audit_cert, audit_tri, audit_sign = "-";
  std::int64_t audit_threshold = 0;
  audit->add_option("certificate", audit_cert, "certificate JSON path or fixture id")->required();
  audit->add_option("--triangle", audit_tri, "three comma-separated vertices")->required();
  audit->add_option("--sign", audit_sign)->check(CLI::IsMember({"+", "-"}))->capture_default_str();
  audit->add_option("--threshold", audit_threshold, "allowed violations (0 = strict triangle property)")->capture_default_str();
  audit->callback([&] {
    action = [&] {
      const auto parts = split_names(audit_tri);
      if (parts.size() != 3) throw PreconditionError("--triangle needs exactly three vertices");
      const std::array<std::string, 3> t{parts[0], parts[1], parts[2]};
      const Certificate c = load_certificate(audit_cert);
      const int sign = audit_sign == "+" ? kPositive : kNegative;
      const bool ok = triangle_property_audit(c, t, sign, audit_threshold);
      Output(gl).emit({{"triangle", parts}, {"sign", audit_sign},
                       {"missing", triangle_missing_count(c, t)},
                       {"all_three", triangle_full_count(c, t)},
                       {"threshold", audit_threshold}, {"ok", ok}});
      return int(ok ? kOk : kFailed);
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and ratio thresholds");
  bounds->require_subcommand(1);
  bounds->fallthrough();
  auto* mu = bounds->add_subcommand("mu", "mu_i for given p, q");
  std::int64_t bp = 0, bq = 0;
  unsigned bi = 0;
  mu->add_option("--p", bp)->required();
  mu->add_option("--q", bq)->required();
  mu->add_option("--i", bi)->capture_default_str();
  mu->callback([&] {
    action = [&] {
      const BoundParams params(bp, bq);
      const auto first = first_infeasible_index(params);
      Output(gl).emit({{"p", bp}, {"q", bq}, {"i", bi},
                       {"m_upper", m_upper_bound(params).get_str()},
                       {"mu", to_string(mu_bound(params, bi))},
                       {"mu_recurrence", to_string(mu_bound_recurrence(params, bi))},
                       {"first_infeasible_index", first ? json(*first) : json(nullptr)}});
      return int(kOk);
    };
  });
  auto* thresholds = bounds->add_subcommand("thresholds", "the three derived ratio thresholds");
  thresholds->callback([&] {
    action = [&] {
      Output(gl).emit({{"threshold_83_41", to_string(threshold_83_41())},
                       {"threshold_172_85", to_string(threshold_172_85())},
                       {"threshold_52_25", to_string(threshold_52_25())},
                       {"counting_first", arboricity_counting_first().normal().to_string() + " >= 0"},
                       {"counting_second", arboricity_counting_second().normal().to_string() + " >= 0"}});
      return int(kOk);
    };
  });

  // check
  auto* check = app.add_subcommand("check", "structural lemmas by exhaustive search");
  std::string check_name, check_graph = "w-hat";
  check->add_option("name", check_name)->required()->check(CLI::IsMember({"lemma-3.1", "forest-lemmas", "triangle-signs"}));
  check->add_option("--construction", check_graph, "construction for triangle-signs")->capture_default_str();
  check->callback([&] {
    action = [&] {
      if (check_name == "lemma-3.1") {
        const GadgetGraph w = w_hat();
        json blocks = json::array();
        for (const auto& s : uv_block_family(w)) blocks.push_back(names_of(w.graph, s));
        const auto lemma = check_missing_triangle_lemma(w_prime());
        json doc{{"blocks", blocks}, {"block_count", blocks.size()},
                 {"w_prime_sets_checked", lemma.maximal_sets_checked}, {"holds", lemma.holds}};
        if (lemma.counterexample) doc["counterexample"] = names_of(w_prime().graph, *lemma.counterexample);
        Output(gl).emit(doc);
        return int(lemma.holds && blocks.size() == 10 ? kOk : kFailed);
      }
      if (check_name == "forest-lemmas") {
        const auto r = check_forest_lemmas(w_underlying());
        Output(gl).emit({{"max_forest", r.max_acyclic_order},
                         {"max_forest_with_uv", r.max_acyclic_order_with_uv},
                         {"order5_with_u", r.order5_sets_with_u},
                         {"order5_with_u_hits_two", r.order5_with_u_hits_two},
                         {"holds", r.matches_expected()}});
        return int(r.matches_expected() ? kOk : kFailed);
      }
      const GadgetGraph g = construction(check_graph, 1);
      json tris = json::array();
      bool ok = true;
      for (const auto& t : g.marked_triangles) {
        const int s = triangle_sign(g.graph, t);
        ok = ok && s == kNegative;
        tris.push_back({{"triangle", names_of(g.graph, t)}, {"sign", s}});
      }
      Output(gl).emit({{"construction", check_graph}, {"marked_triangles", tris},
                       {"all_negative", ok}});
      return int(ok ? kOk : kFailed);
    };
  });

  // reproduce
  auto* reproduce = app.add_subcommand("reproduce", "run acceptance criteria");
  std::string which = "all";
  std::vector<std::string> ids{"all"};
  for (const auto& c : criteria()) {
    ids.push_back(std::to_string(c.id));
    ids.emplace_back(c.name);
  }
  reproduce->add_option("criterion", which, "all, a number 1-10, or a name")->check(CLI::IsMember(ids))->capture_default_str();
  reproduce->callback([&] {
    action = [&] {
      Output out(gl);
      return cmd_reproduce(gl, which, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CompositionError& e) {
    std::cerr << "composition failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
