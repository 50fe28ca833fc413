#include "sigcolor/composer.hpp"

#include <algorithm>
#include <bitset>
#include <random>
#include <set>
#include <string>

#include "sigcolor/error.hpp"
#include "sigcolor/fixtures.hpp"

namespace sigcolor {

namespace {

constexpr int kP = kComposerPalette;
constexpr int kQ = kComposerColorsPerVertex;
using Palette = std::bitset<kP>;

// One palette per vertex; slot k of every palette is the same color.
using SlotColoring = std::vector<Palette>;

SlotColoring expand(const SignedGraph& g, const Certificate& c) {
  if (c.colors_used() > kP) throw CompositionError("coloring uses more than 83 colors");
  SlotColoring colors(g.vertex_count());
  int slot = 0;
  for (const auto& cls : c.classes) {
    for (std::int64_t r = 0; r < cls.rep; ++r, ++slot) {
      for (const auto& name : cls.members) colors[g.id(name)].set(slot);
    }
  }
  return colors;
}

Certificate collapse(const SignedGraph& g, const SlotColoring& colors) {
  Certificate c{kP, kQ, CertificateMode::kBalanced, {}};
  for (int slot = 0; slot < kP; ++slot) {
    ColorClass cls{{}, 1};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (colors[v].test(slot)) cls.members.push_back(g.name(v));
    }
    if (!cls.members.empty()) c.classes.push_back(std::move(cls));
  }
  return merge_duplicate_classes(c);
}

// Fills the positive triangle t with its inner triangle p (p[i] not
// adjacent to t[i]). Pair slots of (t_i, t_i+1) take p_i; the slots private
// to t_i split 13 / 1 / rest over {p_i, p_i+1}, {p_i+1, p_i+2}, {p_i+2}.
void fill_positive_triangle(SlotColoring& colors, const std::array<VertexId, 3>& t,
                            const std::array<VertexId, 3>& p, const std::string& label) {
  std::array<std::vector<int>, 3> pair_slots;
  std::array<std::vector<int>, 3> single_slots;
  int all = 0;
  for (int s = 0; s < kP; ++s) {
    const std::array<bool, 3> in{colors[t[0]].test(s), colors[t[1]].test(s),
                                 colors[t[2]].test(s)};
    const int hits = in[0] + in[1] + in[2];
    if (hits == 3) {
      ++all;
    } else if (hits == 2) {
      for (int i = 0; i < 3; ++i) {
        if (in[i] && in[(i + 1) % 3]) pair_slots[i].push_back(s);
      }
    } else if (hits == 1) {
      for (int i = 0; i < 3; ++i) {
        if (in[i]) single_slots[i].push_back(s);
      }
    }
  }
  const std::size_t pi = pair_slots[0].size();
  const std::size_t sigma = single_slots[0].size();
  for (int i = 1; i < 3; ++i) {
    if (pair_slots[i].size() != pi || single_slots[i].size() != sigma) {
      throw CompositionError("positive triangle " + label + " is not rotation symmetric");
    }
  }
  if (pi + sigma != 27 || sigma < 14) {
    throw CompositionError("positive triangle " + label + " has pattern (" +
                           std::to_string(all) + "," + std::to_string(pi) + "," +
                           std::to_string(sigma) + "), no extension rule");
  }
  for (int i = 0; i < 3; ++i) {
    const VertexId p0 = p[i], p1 = p[(i + 1) % 3], p2 = p[(i + 2) % 3];
    for (int s : pair_slots[i]) colors[p0].set(s);
    for (std::size_t k = 0; k < sigma; ++k) {
      const int s = single_slots[i][k];
      if (k < 13) {
        colors[p0].set(s);
        colors[p1].set(s);
      } else if (k == 13) {
        colors[p1].set(s);
        colors[p2].set(s);
      } else {
        colors[p2].set(s);
      }
    }
  }
}

// Gives the apex of a negative face 41 colors: a_i colors private to face
// vertex i on the face (a_i in {13,14}) plus b colors missing the face.
void extend_apex(SlotColoring& colors, const std::array<VertexId, 3>& face, VertexId apex,
                 const SignedGraph& g) {
  std::array<std::vector<int>, 3> single;
  std::vector<int> missing;
  for (int s = 0; s < kP; ++s) {
    const int hits = colors[face[0]].test(s) + colors[face[1]].test(s) + colors[face[2]].test(s);
    if (hits == 0) missing.push_back(s);
    if (hits != 1) continue;
    for (int i = 0; i < 3; ++i) {
      if (colors[face[i]].test(s)) single[i].push_back(s);
    }
  }
  for (int mask = 7; mask >= 0; --mask) {  // prefer 14s, first vertex first
    std::array<int, 3> a{};
    int sum = 0;
    bool fits = true;
    for (int i = 0; i < 3; ++i) {
      a[i] = (mask >> (2 - i)) & 1 ? 14 : 13;
      sum += a[i];
      fits = fits && static_cast<std::size_t>(a[i]) <= single[i].size();
    }
    const int b = kQ - sum;
    if (!fits || b < 0 || static_cast<std::size_t>(b) > missing.size()) continue;
    for (int i = 0; i < 3; ++i) {
      for (int k = 0; k < a[i]; ++k) colors[apex].set(single[i][k]);
    }
    for (int k = 0; k < b; ++k) colors[apex].set(missing[k]);
    return;
  }
  throw CompositionError("no apex profile for face " + g.name(face[0]) + "," +
                         g.name(face[1]) + "," + g.name(face[2]) + ": private colors " +
                         std::to_string(single[0].size()) + "/" +
                         std::to_string(single[1].size()) + "/" +
                         std::to_string(single[2].size()) + ", missing " +
                         std::to_string(missing.size()));
}

struct WPrimeTemplate {
  GadgetGraph gadget;
  // Units in slot order; each is the set of gadget vertices on that color.
  std::vector<std::vector<VertexId>> units;
};

const WPrimeTemplate& template_for(int uv_overlap) {
  static const auto build = [](Fixture f) {
    WPrimeTemplate t{w_prime(), {}};
    const Certificate c = extend_to_w_prime(load_fixture(f));
    const SlotColoring colors = expand(t.gadget.graph, c);
    for (int s = 0; s < kP; ++s) {
      std::vector<VertexId> unit;
      for (VertexId v = 0; v < t.gadget.graph.vertex_count(); ++v) {
        if (colors[v].test(s)) unit.push_back(v);
      }
      t.units.push_back(std::move(unit));
    }
    return t;
  };
  static const WPrimeTemplate tight = build(Fixture::kWheel83Tight);
  static const WPrimeTemplate loose = build(Fixture::kWheel83);
  if (uv_overlap == 13) return tight;
  if (uv_overlap == 14) return loose;
  throw CompositionError("host edge has " + std::to_string(uv_overlap) +
                         " common colors; templates exist for 13 and 14 only");
}

void extend_substitution(SlotColoring& colors, const GadgetGraph& g, VertexId x, VertexId y,
                         const std::string& suffix) {
  const int shared = static_cast<int>((colors[x] & colors[y]).count());
  const WPrimeTemplate& tpl = template_for(shared);
  const SignedGraph& w = tpl.gadget.graph;
  const VertexId u = tpl.gadget.terminal("u");
  const VertexId v = tpl.gadget.terminal("v");

  // Group by membership on the identified edge: 0 neither, 1 y/v, 2 x/u, 3 both.
  std::array<std::vector<int>, 4> host;
  for (int s = 0; s < kP; ++s) host[2 * colors[x].test(s) + colors[y].test(s)].push_back(s);
  std::array<std::vector<const std::vector<VertexId>*>, 4> guest;
  for (const auto& unit : tpl.units) {
    const bool has_u = std::find(unit.begin(), unit.end(), u) != unit.end();
    const bool has_v = std::find(unit.begin(), unit.end(), v) != unit.end();
    guest[2 * has_u + has_v].push_back(&unit);
  }
  for (int k = 0; k < 4; ++k) {
    if (host[k].size() != guest[k].size()) {
      throw CompositionError("template mismatch on edge " + g.graph.name(x) + "," +
                             g.graph.name(y) + ": group " + std::to_string(k) + " has " +
                             std::to_string(host[k].size()) + " host colors but " +
                             std::to_string(guest[k].size()) + " template colors");
    }
    for (std::size_t j = 0; j < host[k].size(); ++j) {
      for (VertexId gv : *guest[k][j]) {
        if (gv == u || gv == v) continue;
        colors[g.graph.id(w.name(gv) + suffix)].set(host[k][j]);
      }
    }
  }
}

void color_base_triangle(SlotColoring& colors, const std::array<VertexId, 3>& t,
                         BaseProfile profile) {
  std::array<int, 3> a{14, 14, 14};  // a12, a13, a23
  if (profile == BaseProfile::k14_14_13) a = {14, 14, 13};
  if (profile == BaseProfile::k14_13_13) a = {14, 13, 13};
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  const std::array<int, 3> singles{kQ - a[0] - a[1], kQ - a[0] - a[2], kQ - a[1] - a[2]};
  int slot = 0;
  for (int k = 0; k < 3; ++k) {
    for (int r = 0; r < a[k]; ++r, ++slot) {
      colors[t[pairs[k].first]].set(slot);
      colors[t[pairs[k].second]].set(slot);
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int r = 0; r < singles[i]; ++r, ++slot) colors[t[i]].set(slot);
  }
}

std::array<std::string, 3> face_names(const SignedGraph& g, const VertexSet& t) {
  const auto m = t.members();
  return {g.name(m[0]), g.name(m[1]), g.name(m[2])};
}

}  // namespace

Certificate extend_to_w_prime(const Certificate& wheel) {
  const GadgetGraph wp = w_prime();
  const SignedGraph& g = wp.graph;
  const GadgetGraph wh = w_hat();
  SlotColoring colors = expand(g, wheel);

  std::set<std::string> base_names(wh.graph.names().begin(), wh.graph.names().end());
  for (const auto& tri : w_hat_positive_triangles()) {
    const std::array<VertexId, 3> t{g.id(tri[0]), g.id(tri[1]), g.id(tri[2])};
    std::array<VertexId, 3> p{};
    for (int i = 0; i < 3; ++i) {
      bool found = false;
      for (VertexId c = 0; c < g.vertex_count(); ++c) {
        if (base_names.contains(g.name(c))) continue;
        if (!g.adjacent(c, t[i]) && g.adjacent(c, t[(i + 1) % 3]) &&
            g.adjacent(c, t[(i + 2) % 3])) {
          p[i] = c;
          found = true;
        }
      }
      if (!found) throw CompositionError("w_prime lacks the inner triangle of " + tri[0]);
    }
    fill_positive_triangle(colors, t, p, tri[0] + tri[1] + tri[2]);
  }
  Certificate out = collapse(g, colors);
  out.p = kP;
  out.q = wheel.q;
  return out;
}

Composition compose_8341(const BuildTrace& trace, BaseProfile base) {
  GadgetGraph g = k3_minus();
  SlotColoring colors(g.graph.vertex_count());
  const std::array<VertexId, 3> abc{g.graph.id("a"), g.graph.id("b"), g.graph.id("c")};
  color_base_triangle(colors, abc, base);
  if (trace.base == TraceBase::kK4Minus) {
    g = k4_minus();
    colors.resize(g.graph.vertex_count());
    extend_apex(colors, abc, g.graph.id("d"), g.graph);
  }

  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    GadgetGraph next = apply_step(g, trace.steps[i], i);
    colors.resize(next.graph.vertex_count());
    try {
      if (const auto* op1 = std::get_if<InnerK4Step>(&trace.steps[i])) {
        const std::array<VertexId, 3> face{next.graph.id(op1->face[0]),
                                           next.graph.id(op1->face[1]),
                                           next.graph.id(op1->face[2])};
        extend_apex(colors, face, next.graph.id(trace_apex_name(i)), next.graph);
      } else {
        const auto& op2 = std::get<SubstituteStep>(trace.steps[i]);
        extend_substitution(colors, next, next.graph.id(op2.edge[0]),
                            next.graph.id(op2.edge[1]), trace_suffix(i));
      }
    } catch (const CompositionError& e) {
      throw CompositionError("trace step " + std::to_string(i) + ": " + e.what());
    }
    g = std::move(next);
  }
  Certificate c = collapse(g.graph, colors);
  return {std::move(g), std::move(c)};
}

BuildTrace g_hat_trace() {
  BuildTrace trace;
  trace.steps = {SubstituteStep{{"a", "b"}}, SubstituteStep{{"a", "c"}},
                 SubstituteStep{{"b", "c"}}};
  const GadgetGraph g = build_from_trace(trace);
  const VertexSet outer = g.graph.ids({"a", "b", "c"});
  for (const auto& t : g.marked_triangles) {
    if (t != outer) trace.steps.push_back(InnerK4Step{face_names(g.graph, t)});
  }
  return trace;
}

BuildTrace random_trace(std::uint64_t seed, std::size_t depth, TraceBase base) {
  std::mt19937_64 rng(seed);
  BuildTrace trace;
  trace.base = base;
  GadgetGraph g = base == TraceBase::kK3Minus ? k3_minus() : k4_minus();
  for (std::size_t k = 0; k < depth; ++k) {
    TraceStep step;
    if (rng() % 2 == 0 && !g.marked_triangles.empty()) {
      const auto& t = g.marked_triangles[rng() % g.marked_triangles.size()];
      step = InnerK4Step{face_names(g.graph, t)};
    } else {
      const Edge e = g.graph.edges()[rng() % g.graph.edge_count()];
      std::array<std::string, 2> ends{g.graph.name(e.a), g.graph.name(e.b)};
      if (rng() % 2 == 0) std::swap(ends[0], ends[1]);
      step = SubstituteStep{ends};
    }
    g = apply_step(g, step, k);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace sigcolor
