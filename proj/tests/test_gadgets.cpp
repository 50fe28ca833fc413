#include <gtest/gtest.h>

#include <set>

#include "sigcolor/error.hpp"
#include "sigcolor/gadgets.hpp"

using namespace sigcolor;

namespace {

// Size bookkeeping, independent of the builders: substituting an edge by
// a 16-vertex gadget adds 14 vertices and 7 marked faces; filling a negative
// face adds one apex and turns 1 marked face into 3.
constexpr std::size_t kWHat = 10;
constexpr std::size_t kWPrime = kWHat + 2 * 3;
constexpr std::size_t kWPrimeMarked = 5 + 2;
constexpr std::size_t kWDouble = kWPrime + kWPrimeMarked;
constexpr std::size_t kGK3Sub = 3 + 3 * (kWPrime - 2);
constexpr std::size_t kGK3 = kGK3Sub + 3 * kWPrimeMarked;
constexpr std::size_t kUHat = 4 + 6 * (kWPrime - 2);
constexpr std::size_t kUHatMarked = 6 * kWPrimeMarked;
constexpr std::size_t kGK4 = kUHat + kUHatMarked;
constexpr std::size_t kW1 = kWHat + 3 * (kWHat - 2);

bool simple(const SignedGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.a == e.b || !seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) return false;
  }
  return true;
}

void expect_sound(const GadgetGraph& g) {
  EXPECT_NO_THROW(check_gadget(g));
  EXPECT_TRUE(simple(g.graph));
  for (const auto& t : g.marked_triangles) EXPECT_EQ(triangle_sign(g.graph, t), kNegative);
}

}  // namespace

TEST(Gadgets, BaseGraphs) {
  const GadgetGraph k3 = k3_minus();
  EXPECT_EQ(k3.graph.vertex_count(), 3U);
  EXPECT_EQ(k3.marked_triangles.size(), 1U);
  expect_sound(k3);
  const GadgetGraph k4 = k4_minus();
  EXPECT_TRUE(is_k4_minus_equivalent(k4.graph));
  EXPECT_EQ(k4.marked_triangles.size(), 4U);
  EXPECT_EQ(k4.terminal("u"), k4.graph.id("a"));
  EXPECT_EQ(k4.terminal("v"), k4.graph.id("b"));
  expect_sound(k4);
}

TEST(Gadgets, WheelShape) {
  const GadgetGraph w = w_hat();
  EXPECT_EQ(w.graph.vertex_count(), kWHat);
  EXPECT_EQ(w.graph.edge_count(), 24U);
  EXPECT_EQ(w.marked_triangles.size(), 5U);
  expect_sound(w);
  // exactly two positive edges and exactly two positive triangles
  int positive = 0;
  for (const Edge& e : w.graph.edges()) positive += e.sign == kPositive;
  EXPECT_EQ(positive, 2);
  std::set<std::set<std::string>> pos;
  for (const auto& t : all_triangles(w.graph)) {
    if (t.sign != kPositive) continue;
    std::set<std::string> names;
    for (VertexId v : t.vertices) names.insert(w.graph.name(v));
    pos.insert(names);
  }
  EXPECT_EQ(pos, (std::set<std::set<std::string>>{
                     {"u", "x1", "x2"}, {"u", "x2", "z"}, {"v", "x3", "x4"}, {"v", "t", "x4"}}));
  EXPECT_EQ(w.graph.sign(w.terminal("u"), w.terminal("v")), kNegative);
}

TEST(Gadgets, ConstructionSizes) {
  EXPECT_EQ(w_prime().graph.vertex_count(), kWPrime);
  EXPECT_EQ(w_prime().marked_triangles.size(), kWPrimeMarked);
  EXPECT_EQ(w_double_prime().graph.vertex_count(), kWDouble);
  EXPECT_EQ(w_double_prime().marked_triangles.size(), 3 * kWPrimeMarked);
  EXPECT_EQ(g_hat_k3().graph.vertex_count(), kGK3);
  EXPECT_EQ(u_hat().graph.vertex_count(), kUHat);
  EXPECT_EQ(u_hat().marked_triangles.size(), kUHatMarked);
  EXPECT_EQ(g_hat_k4().graph.vertex_count(), kGK4);
  EXPECT_EQ(w1_underlying().graph.vertex_count(), kW1);
  EXPECT_EQ(w1_underlying(true).graph.vertex_count(), kW1);
  for (const auto& g : {w_prime(), w_double_prime(), g_hat_k3(), u_hat(), g_hat_k4()}) {
    expect_sound(g);
  }
}

TEST(Gadgets, SequenceGuardAndFirstTerm) {
  const GadgetGraph g1 = g_sequence(1);
  EXPECT_EQ(g1.graph.vertex_count(), kUHat + kUHatMarked * (4 - 3));
  EXPECT_EQ(g_sequence(0).graph.vertex_count(), 4U);
  EXPECT_THROW(g_sequence(3), GuardExceeded);
  EXPECT_THROW(g_sequence(-1), PreconditionError);
}

TEST(Gadgets, PositiveFaceFill) {
  const GadgetGraph wp = w_prime();
  for (const char* inner : {"a1", "a2", "a3", "b1", "b2", "b3"}) {
    EXPECT_TRUE(wp.graph.find(inner).has_value()) << inner;
  }
  // each inner vertex misses exactly one corner of (u, x2, x1)
  const std::array<std::string, 3> corners{"u", "x2", "x1"};
  const std::array<std::string, 3> inner{"a1", "a3", "a2"};
  for (int i = 0; i < 3; ++i) {
    const VertexId p = wp.graph.id(inner[i]);
    int seen = 0;
    for (const auto& c : corners) seen += wp.graph.adjacent(p, wp.graph.id(c));
    EXPECT_EQ(seen, 2);
    EXPECT_FALSE(wp.graph.adjacent(p, wp.graph.id(corners[i])));
  }
}

TEST(Gadgets, NegativeFaceFillRequiresNegativeTriangle) {
  const GadgetGraph w = w_hat();
  const VertexSet pos = w.graph.ids({"u", "x1", "x2"});
  EXPECT_THROW(complete_negative_face(w, pos), PreconditionError);
  const GadgetGraph k = complete_negative_face(k3_minus(), k3_minus().marked_triangles[0], "o");
  EXPECT_TRUE(is_k4_minus_equivalent(k.graph));
  EXPECT_EQ(k.marked_triangles.size(), 3U);
}

TEST(Gadgets, TraceRoundTripAndReplay) {
  BuildTrace t;
  t.steps.push_back(SubstituteStep{{"a", "b"}});
  t.steps.push_back(InnerK4Step{{"a", "c", "b"}});
  const BuildTrace back = parse_trace(serialize_trace(t));
  EXPECT_EQ(serialize_trace(back), serialize_trace(t));
  const GadgetGraph g = build_from_trace(t);
  EXPECT_EQ(g.graph.vertex_count(), 3 + 14 + 1);
  EXPECT_TRUE(g.graph.find(trace_apex_name(1)).has_value());
  EXPECT_TRUE(g.graph.find("w" + trace_suffix(0)).has_value());
  expect_sound(g);
}

TEST(Gadgets, TraceErrors) {
  BuildTrace t;
  t.steps.push_back(SubstituteStep{{"a", "zz"}});
  EXPECT_THROW(build_from_trace(t), PreconditionError);
  EXPECT_THROW(parse_trace(R"({"base":"K5","steps":[]})"), ParseError);
  EXPECT_THROW(parse_trace(R"({"base":"K3_MINUS","steps":[{"op":"nope"}]})"), ParseError);
}
