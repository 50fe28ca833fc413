#include "sigcolor/gadgets.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "sigcolor/error.hpp"

namespace sigcolor {

using json = nlohmann::json;

VertexId GadgetGraph::terminal(std::string_view name) const {
  auto it = terminals.find(name);
  if (it == terminals.end()) {
    throw PreconditionError("gadget has no terminal '" + std::string(name) + "'");
  }
  return it->second;
}

void check_gadget(const GadgetGraph& g) {
  for (const auto& [name, v] : g.terminals) {
    if (v >= g.graph.vertex_count()) {
      throw PreconditionError("terminal '" + name + "' is not a vertex");
    }
  }
  for (const auto& t : g.marked_triangles) {
    if (triangle_sign(g.graph, t) != kNegative) {
      throw PreconditionError("marked triangle is not negative");
    }
  }
}

namespace {

GadgetGraph complete_negative(int n) {
  static constexpr std::array<const char*, 4> kNames{"a", "b", "c", "d"};
  GadgetGraph out;
  for (int i = 0; i < n; ++i) out.graph.add_vertex(kNames[i]);
  for (VertexId a = 0; a < static_cast<VertexId>(n); ++a) {
    for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b) out.graph.add_edge(a, b, kNegative);
  }
  for (const auto& t : all_triangles(out.graph)) out.marked_triangles.push_back(t.vertices);
  out.terminals = {{"y1", 0}, {"y2", 1}, {"y3", 2}};
  return out;
}

// Copies every vertex of `src` not listed in `shared` into `dst` with the
// suffix appended; shared vertices map to the given host ids.
std::vector<VertexId> embed_copy(SignedGraph& dst, const SignedGraph& src,
                                 const std::vector<std::pair<VertexId, VertexId>>& shared,
                                 std::string_view suffix) {
  constexpr VertexId kUnset = ~VertexId{0};
  std::vector<VertexId> remap(src.vertex_count(), kUnset);
  for (auto [from, to] : shared) remap[from] = to;
  for (VertexId v = 0; v < src.vertex_count(); ++v) {
    if (remap[v] == kUnset) remap[v] = dst.add_vertex(src.name(v) + std::string(suffix));
  }
  for (const Edge& e : src.edges()) {
    const VertexId a = remap[e.a];
    const VertexId b = remap[e.b];
    if (auto existing = dst.sign(a, b)) {
      if (*existing != e.sign) {
        throw PreconditionError("identified edge has mismatched sign");
      }
      continue;
    }
    dst.add_edge(a, b, e.sign);
  }
  return remap;
}

VertexSet remap_set(const VertexSet& s, const std::vector<VertexId>& remap) {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(remap[v]);
  return VertexSet(std::move(out));
}

void require_triangle(const SignedGraph& g, const std::array<VertexId, 3>& t, int sign,
                      const char* what) {
  for (VertexId v : t) {
    if (v >= g.vertex_count()) throw PreconditionError(std::string(what) + ": unknown vertex");
  }
  const VertexSet s{t[0], t[1], t[2]};
  if (triangle_sign(g, s) != sign) {
    throw PreconditionError(std::string(what) + ": triangle has the wrong sign");
  }
}

// Smallest subset X of the triangle positions such that switching at X turns
// `from` (signs of edges 01, 12, 20) into `to`. Both sign patterns must have
// the same product.
std::array<bool, 3> switching_positions(const std::array<int, 3>& from,
                                        const std::array<int, 3>& to) {
  std::optional<std::array<bool, 3>> best;
  int best_size = 4;
  for (int mask = 0; mask < 8; ++mask) {
    const std::array<bool, 3> x{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    bool ok = true;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const int flipped = (x[i] != x[j]) ? -from[i] : from[i];
      ok = ok && flipped == to[i];
    }
    const int size = static_cast<int>(x[0]) + x[1] + x[2];
    if (ok && size < best_size) {
      best = x;
      best_size = size;
    }
  }
  if (!best) throw PreconditionError("triangle sign patterns are not switching equivalent");
  return *best;
}

std::array<int, 3> edge_signs(const SignedGraph& g, const std::array<VertexId, 3>& t) {
  return {*g.sign(t[0], t[1]), *g.sign(t[1], t[2]), *g.sign(t[2], t[0])};
}

}  // namespace

GadgetGraph k3_minus() { return complete_negative(3); }

GadgetGraph k4_minus() {
  GadgetGraph g = complete_negative(4);
  g.terminals.emplace("u", 0);
  g.terminals.emplace("v", 1);
  return g;
}

GadgetGraph complete_negative_face(const GadgetGraph& g, const VertexSet& t,
                                   std::optional<std::string> apex_name) {
  if (t.size() != 3) throw PreconditionError("complete_negative_face: need a triangle");
  const auto m = t.members();
  require_triangle(g.graph, {m[0], m[1], m[2]}, kNegative, "complete_negative_face");

  GadgetGraph out = g;
  const VertexId apex = out.graph.add_vertex(
      apex_name ? *apex_name : "o" + std::to_string(g.graph.vertex_count()));
  // With the first edge negative, each triangle through the apex is negative
  // exactly when s(t_i, apex) = -s(t_0, t_i) * s(t_0, apex).
  out.graph.add_edge(m[0], apex, kNegative);
  out.graph.add_edge(m[1], apex, -*g.graph.sign(m[0], m[1]) * kNegative);
  out.graph.add_edge(m[2], apex, -*g.graph.sign(m[0], m[2]) * kNegative);

  auto& marked = out.marked_triangles;
  marked.erase(std::remove(marked.begin(), marked.end(), t), marked.end());
  marked.push_back(VertexSet{m[0], m[1], apex});
  marked.push_back(VertexSet{m[0], m[2], apex});
  marked.push_back(VertexSet{m[1], m[2], apex});
  return out;
}

GadgetGraph complete_positive_face(const GadgetGraph& g, std::array<VertexId, 3> t,
                                   std::array<std::string, 3> inner_names) {
  require_triangle(g.graph, t, kPositive, "complete_positive_face");
  const auto x = switching_positions({kPositive, kPositive, kPositive}, edge_signs(g.graph, t));

  GadgetGraph out = g;
  std::array<VertexId, 3> p{};
  for (int i = 0; i < 3; ++i) p[i] = out.graph.add_vertex(std::move(inner_names[i]));
  for (int i = 0; i < 3; ++i) out.graph.add_edge(p[i], p[(i + 1) % 3], kNegative);
  for (int i = 0; i < 3; ++i) {
    const int flip = x[i] ? -1 : 1;
    out.graph.add_edge(t[i], p[(i + 1) % 3], flip * kPositive);
    out.graph.add_edge(t[i], p[(i + 2) % 3], flip * kNegative);
  }
  out.marked_triangles.push_back(VertexSet{p[0], p[1], p[2]});
  return out;
}

GadgetGraph complete_positive_face(const GadgetGraph& g, std::array<VertexId, 3> t) {
  return complete_positive_face(
      g, t, {g.graph.name(t[0]) + "'", g.graph.name(t[1]) + "'", g.graph.name(t[2]) + "'"});
}

GadgetGraph w_hat() {
  GadgetGraph out;
  SignedGraph& g = out.graph;
  for (const char* n : {"u", "v", "w", "x1", "x2", "x3", "x4", "x5", "z", "t"}) g.add_vertex(n);
  // Spokes and rim of the wheel.
  for (const char* x : {"x1", "x2", "x3", "x4", "x5"}) g.add_edge("w", x, kNegative);
  g.add_edge("x1", "x2", kNegative);
  g.add_edge("x2", "x3", kNegative);
  g.add_edge("x3", "x4", kNegative);
  g.add_edge("x4", "x5", kNegative);
  g.add_edge("x5", "x1", kNegative);
  g.add_edge("z", "x2", kNegative);
  g.add_edge("z", "x3", kNegative);
  g.add_edge("t", "x4", kNegative);
  g.add_edge("t", "x5", kNegative);
  g.add_edge("v", "z", kNegative);
  g.add_edge("v", "t", kNegative);
  g.add_edge("v", "x3", kNegative);
  g.add_edge("v", "x4", kPositive);
  g.add_edge("u", "x1", kNegative);
  g.add_edge("u", "x2", kPositive);
  g.add_edge("u", "x5", kNegative);
  g.add_edge("u", "t", kNegative);
  g.add_edge("u", "z", kNegative);
  g.add_edge("u", "v", kNegative);

  out.terminals = {{"u", g.id("u")}, {"v", g.id("v")}};
  out.marked_triangles = {g.ids({"w", "x1", "x2"}), g.ids({"w", "x1", "x5"}),
                          g.ids({"w", "x3", "x4"}), g.ids({"z", "x2", "x3"}),
                          g.ids({"t", "x4", "x5"})};
  return out;
}

std::array<std::array<std::string, 3>, 2> w_hat_positive_triangles() {
  return {{{"u", "x1", "x2"}, {"v", "x3", "x4"}}};
}

GadgetGraph w_prime() {
  GadgetGraph g = w_hat();
  const auto& s = g.graph;
  // Orientation and names follow the drawing: a1 sits opposite u, a2
  // opposite x1, a3 opposite x2 (likewise b1..b3 against v, x3, x4).
  g = complete_positive_face(g, {s.id("u"), s.id("x2"), s.id("x1")}, {"a1", "a3", "a2"});
  g = complete_positive_face(g, {g.graph.id("v"), g.graph.id("x4"), g.graph.id("x3")},
                             {"b1", "b3", "b2"});
  return g;
}

GadgetGraph w_double_prime() {
  GadgetGraph g = w_prime();
  const auto faces = g.marked_triangles;
  int k = 1;
  for (const auto& face : faces) {
    g = complete_negative_face(g, face, "c" + std::to_string(k++));
  }
  return g;
}

GadgetGraph substitute_edge(const GadgetGraph& g, VertexId x, VertexId y,
                            const GadgetGraph& gadget, std::string_view suffix) {
  const auto host_sign = g.graph.sign(x, y);
  if (!host_sign) throw PreconditionError("substitute_edge: host pair is not an edge");
  const VertexId u = gadget.terminal("u");
  const VertexId v = gadget.terminal("v");
  const auto gadget_sign = gadget.graph.sign(u, v);
  if (!gadget_sign) throw PreconditionError("substitute_edge: gadget terminals not adjacent");

  const SignedGraph copy =
      (*gadget_sign == *host_sign) ? gadget.graph : switch_at(gadget.graph, VertexSet{v});
  GadgetGraph out = g;
  const auto remap = embed_copy(out.graph, copy, {{u, x}, {v, y}}, suffix);
  for (const auto& t : gadget.marked_triangles) out.marked_triangles.push_back(remap_set(t, remap));
  return out;
}

GadgetGraph glue_triangle(const GadgetGraph& host, std::array<VertexId, 3> t_host,
                          const GadgetGraph& guest, std::array<VertexId, 3> t_guest,
                          std::string_view suffix) {
  require_triangle(host.graph, t_host, kNegative, "glue_triangle (host)");
  require_triangle(guest.graph, t_guest, kNegative, "glue_triangle (guest)");
  const auto x = switching_positions(edge_signs(guest.graph, t_guest),
                                     edge_signs(host.graph, t_host));
  std::vector<VertexId> switched;
  for (int i = 0; i < 3; ++i) if (x[i]) switched.push_back(t_guest[i]);
  const SignedGraph copy = switch_at(guest.graph, VertexSet(switched));

  GadgetGraph out = host;
  const auto remap = embed_copy(out.graph, copy,
                                {{t_guest[0], t_host[0]}, {t_guest[1], t_host[1]},
                                 {t_guest[2], t_host[2]}},
                                suffix);
  const VertexSet shared{t_guest[0], t_guest[1], t_guest[2]};
  for (const auto& t : guest.marked_triangles) {
    if (t != shared) out.marked_triangles.push_back(remap_set(t, remap));
  }
  return out;
}

namespace {

GadgetGraph replace_every_edge(GadgetGraph base, const GadgetGraph& gadget) {
  base.marked_triangles.clear();
  const std::vector<Edge> edges(base.graph.edges().begin(), base.graph.edges().end());
  int k = 1;
  for (const Edge& e : edges) {
    base = substitute_edge(base, e.a, e.b, gadget, "#" + std::to_string(k++));
  }
  return base;
}

}  // namespace

GadgetGraph g_hat_k3() { return replace_every_edge(k3_minus(), w_double_prime()); }

GadgetGraph g_hat_k4() {
  GadgetGraph g = replace_every_edge(k4_minus(), w_double_prime());
  g.terminals.erase("u");
  g.terminals.erase("v");
  return g;
}

GadgetGraph u_hat() {
  GadgetGraph g = replace_every_edge(k4_minus(), w_prime());
  g.terminals.erase("u");
  g.terminals.erase("v");
  return g;
}

GadgetGraph g_sequence(int i, int depth_guard) {
  if (i < 0) throw PreconditionError("g_sequence: negative index");
  if (i > depth_guard) {
    throw GuardExceeded("g_sequence: index " + std::to_string(i) + " exceeds depth guard " +
                        std::to_string(depth_guard));
  }
  GadgetGraph current = k4_minus();
  current.terminals.erase("u");
  current.terminals.erase("v");
  const GadgetGraph frame = u_hat();
  for (int level = 1; level <= i; ++level) {
    const std::array<VertexId, 3> outer{current.terminal("y1"), current.terminal("y2"),
                                        current.terminal("y3")};
    GadgetGraph next = frame;
    const auto faces = frame.marked_triangles;
    int k = 7;  // suffixes #1..#6 are taken by the frame's edge copies
    for (const auto& face : faces) {
      const auto m = face.members();
      next = glue_triangle(next, {m[0], m[1], m[2]}, current, outer, "#" + std::to_string(k++));
    }
    current = std::move(next);
  }
  return current;
}

GadgetGraph w_underlying() {
  GadgetGraph g = w_hat();
  for (const Edge& e : std::vector<Edge>(g.graph.edges().begin(), g.graph.edges().end())) {
    g.graph.set_sign(e.a, e.b, kNegative);
  }
  g.marked_triangles.clear();
  return g;
}

GadgetGraph w1_underlying(bool flip_orientation) {
  const GadgetGraph w = w_underlying();
  GadgetGraph out = w;
  const VertexId u = w.graph.id("u");
  int k = 1;
  for (const char* other : {"z", "x1", "t"}) {
    const VertexId o = w.graph.id(other);
    out = flip_orientation ? substitute_edge(out, o, u, w, "#" + std::to_string(k))
                           : substitute_edge(out, u, o, w, "#" + std::to_string(k));
    ++k;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Build traces

std::string trace_suffix(std::size_t step) { return "#" + std::to_string(step); }
std::string trace_apex_name(std::size_t step) { return "o" + trace_suffix(step); }

GadgetGraph apply_step(const GadgetGraph& g, const TraceStep& step, std::size_t step_index) {
  const std::string where = "trace step " + std::to_string(step_index) + ": ";
  try {
    if (const auto* op1 = std::get_if<InnerK4Step>(&step)) {
      const VertexSet face =
          g.graph.ids({op1->face[0], op1->face[1], op1->face[2]});
      return complete_negative_face(g, face, trace_apex_name(step_index));
    }
    const auto& op2 = std::get<SubstituteStep>(step);
    static const GadgetGraph gadget = w_prime();
    return substitute_edge(g, g.graph.id(op2.edge[0]), g.graph.id(op2.edge[1]), gadget,
                           trace_suffix(step_index));
  } catch (const PreconditionError& e) {
    throw PreconditionError(where + e.what());
  }
}

GadgetGraph build_from_trace(const BuildTrace& trace) {
  GadgetGraph g = trace.base == TraceBase::kK3Minus ? k3_minus() : k4_minus();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) g = apply_step(g, trace.steps[i], i);
  return g;
}

BuildTrace parse_trace(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  BuildTrace trace;
  if (!doc.is_object() || !doc.contains("base") || !doc["base"].is_string()) {
    throw ParseError("trace needs a \"base\" string");
  }
  const auto base = doc["base"].get<std::string>();
  if (base == "K3_MINUS") {
    trace.base = TraceBase::kK3Minus;
  } else if (base == "K4_MINUS") {
    trace.base = TraceBase::kK4Minus;
  } else {
    throw ParseError("unknown trace base '" + base + "'");
  }
  if (!doc.contains("steps")) return trace;
  if (!doc["steps"].is_array()) throw ParseError("\"steps\" must be an array");
  auto names = [](const json& arr, std::size_t n) {
    if (!arr.is_array() || arr.size() != n) throw ParseError("step has the wrong arity");
    std::vector<std::string> out;
    for (const auto& x : arr) {
      if (!x.is_string()) throw ParseError("step vertices must be strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  };
  for (const auto& s : doc["steps"]) {
    if (!s.is_object() || !s.contains("op") || !s["op"].is_string()) {
      throw ParseError("step needs an \"op\"");
    }
    const auto op = s["op"].get<std::string>();
    if (op == "inner_k4") {
      if (!s.contains("face")) throw ParseError("inner_k4 step needs \"face\"");
      auto f = names(s["face"], 3);
      trace.steps.push_back(InnerK4Step{{f[0], f[1], f[2]}});
    } else if (op == "substitute_w_prime") {
      if (!s.contains("edge")) throw ParseError("substitute_w_prime step needs \"edge\"");
      auto e = names(s["edge"], 2);
      trace.steps.push_back(SubstituteStep{{e[0], e[1]}});
    } else {
      throw ParseError("unknown step op '" + op + "'");
    }
  }
  return trace;
}

std::string serialize_trace(const BuildTrace& trace) {
  json doc;
  doc["base"] = trace.base == TraceBase::kK3Minus ? "K3_MINUS" : "K4_MINUS";
  doc["steps"] = json::array();
  for (const auto& step : trace.steps) {
    if (const auto* op1 = std::get_if<InnerK4Step>(&step)) {
      doc["steps"].push_back({{"op", "inner_k4"}, {"face", op1->face}});
    } else {
      doc["steps"].push_back(
          {{"op", "substitute_w_prime"}, {"edge", std::get<SubstituteStep>(step).edge}});
    }
  }
  return doc.dump();
}

}  // namespace sigcolor
