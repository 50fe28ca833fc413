#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// A signed graph with named attachment points and a list of marked
/// negative triangles (the faces later surgery is allowed to fill).
struct GadgetGraph {
  SignedGraph graph;
  std::map<std::string, VertexId, std::less<>> terminals;
  std::vector<VertexSet> marked_triangles;

  VertexId terminal(std::string_view name) const;
  bool has_terminal(std::string_view name) const { return terminals.contains(name); }
};

/// Throws PreconditionError unless every terminal exists and every marked
/// triangle is a negative 3-clique.
void check_gadget(const GadgetGraph& g);

// --- Base graphs -----------------------------------------------------------

/// (K3,-) on a, b, c; terminals y1..y3; its single triangle marked.
GadgetGraph k3_minus();
/// (K4,-) on a, b, c, d; terminals y1..y3 = a, b, c (outer triangle) and
/// u = a, v = b; all four triangles marked.
GadgetGraph k4_minus();

// --- Face completion -------------------------------------------------------

/// Adds one apex joined to the negative triangle `t` so that the new K4 is
/// switching equivalent to (K4,-). `t` is replaced in the marked list by the
/// three new triangles through the apex.
GadgetGraph complete_negative_face(const GadgetGraph& g, const VertexSet& t,
                                   std::optional<std::string> apex_name = std::nullopt);

/// Fills the positive triangle (t0, t1, t2) with an inner negative triangle
/// (p0, p1, p2). p_i is not adjacent to t_i; t_i sees p_{i+1} and p_{i+2}.
/// Before switching t_i–p_{i+1} is positive and t_i–p_{i+2} negative, the
/// outer triangle positive and the inner one negative; the gadget is then
/// switched on the smallest subset of {t0,t1,t2} matching the host signs.
/// The inner triangle is appended to the marked list.
GadgetGraph complete_positive_face(const GadgetGraph& g, std::array<VertexId, 3> t,
                                   std::array<std::string, 3> inner_names);
GadgetGraph complete_positive_face(const GadgetGraph& g, std::array<VertexId, 3> t);

// --- The W family ----------------------------------------------------------

/// The 10-vertex signed wheel gadget: u, v, w, x1..x5, z, t. All edges are
/// negative except u–x2 and v–x4. Terminals u, v. Marked: wx1x2, wx1x5,
/// wx3x4, zx2x3, tx4x5.
GadgetGraph w_hat();
/// w_hat with both positive triangles ux1x2 and vx3x4 filled by the
/// positive-face gadget (a1..a3 and b1..b3); seven marked triangles.
GadgetGraph w_prime();
/// w_prime with an apex on each of the seven marked triangles (23 vertices).
GadgetGraph w_double_prime();

/// The positive triangles of w_hat, in (u, x1, x2), (v, x3, x4) order.
std::array<std::array<std::string, 3>, 2> w_hat_positive_triangles();

// --- Surgery ---------------------------------------------------------------

/// Attaches a disjoint copy of `gadget` along the edge (x, y): gadget
/// terminal u becomes x, v becomes y and the gadget's uv edge merges with xy.
/// Copied vertices are renamed `<name><suffix>`. When the gadget's uv sign
/// differs from the host edge the copy is switched at v first.
GadgetGraph substitute_edge(const GadgetGraph& g, VertexId x, VertexId y,
                            const GadgetGraph& gadget, std::string_view suffix);

/// Attaches a copy of `guest` so that t_guest[i] is identified with
/// t_host[i]. The copy is switched on a subset of the identified vertices so
/// the three shared edges agree with the host; they are merged, not doubled.
/// Guest marked triangles other than t_guest are appended.
GadgetGraph glue_triangle(const GadgetGraph& host, std::array<VertexId, 3> t_host,
                          const GadgetGraph& guest, std::array<VertexId, 3> t_guest,
                          std::string_view suffix);

// --- Composite constructions -----------------------------------------------

/// K3 with a w_double_prime copy on every edge (66 vertices).
GadgetGraph g_hat_k3();
/// K4 with a w_double_prime copy on every edge (130 vertices).
GadgetGraph g_hat_k4();
/// K4 with a w_prime copy on every edge; 42 marked triangles.
GadgetGraph u_hat();

inline constexpr int kDefaultSequenceDepthGuard = 2;

/// G_0 = (K4,-); G_i = u_hat with a copy of G_{i-1} glued, by its outer
/// triangle (terminals y1..y3), on each of the 42 marked triangles.
/// Throws GuardExceeded when i > depth_guard.
GadgetGraph g_sequence(int i, int depth_guard = kDefaultSequenceDepthGuard);

/// Unsigned W (all edges -1) with the edges uz, ux1, ut each replaced by a
/// copy of W. By default copy-u maps to the host u; `flip_orientation`
/// maps copy-v to the host u instead. 34 vertices.
GadgetGraph w1_underlying(bool flip_orientation = false);

/// Unsigned view of w_hat: every sign set to -1.
GadgetGraph w_underlying();

// --- Build traces ----------------------------------------------------------

enum class TraceBase { kK3Minus, kK4Minus };

struct InnerK4Step {
  std::array<std::string, 3> face;
};
struct SubstituteStep {
  std::array<std::string, 2> edge;
};
using TraceStep = std::variant<InnerK4Step, SubstituteStep>;

struct BuildTrace {
  TraceBase base = TraceBase::kK3Minus;
  std::vector<TraceStep> steps;
};

/// Vertex names created by step k: apex "o#k" for an inner K4, and
/// "<w_prime name>#k" for a substitution.
std::string trace_suffix(std::size_t step);
std::string trace_apex_name(std::size_t step);

/// Applies one step to `g`; throws PreconditionError naming `step_index`.
GadgetGraph apply_step(const GadgetGraph& g, const TraceStep& step, std::size_t step_index);
GadgetGraph build_from_trace(const BuildTrace& trace);

BuildTrace parse_trace(std::string_view text);
std::string serialize_trace(const BuildTrace& trace);

}  // namespace sigcolor
