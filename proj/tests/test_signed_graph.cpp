#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/signed_graph.hpp"

using namespace sigcolor;

namespace {

SignedGraph triangle(int s1, int s2, int s3) {
  SignedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_vertex("c");
  g.add_edge("a", "b", s1);
  g.add_edge("b", "c", s2);
  g.add_edge("a", "c", s3);
  return g;
}

int cycle_sign(const SignedGraph& g, const std::vector<VertexId>& c) {
  int s = 1;
  for (std::size_t i = 0; i < c.size(); ++i) s *= g.sign(c[i], c[(i + 1) % c.size()]).value();
  return s;
}

}  // namespace

TEST(SignedGraph, RejectsLoopsParallelEdgesAndBadSigns) {
  SignedGraph g = triangle(-1, -1, -1);
  EXPECT_THROW(g.add_edge("a", "a", -1), PreconditionError);
  EXPECT_THROW(g.add_edge("a", "b", 1), PreconditionError);
  EXPECT_THROW(g.add_vertex("a"), PreconditionError);
  g.add_vertex("d");
  EXPECT_THROW(g.add_edge("a", "d", 0), PreconditionError);
  EXPECT_THROW(g.id("nope"), PreconditionError);
}

TEST(SignedGraph, VertexSetIsCanonical) {
  const VertexSet s{3, 1, 2};
  EXPECT_EQ(std::vector<VertexId>(s.begin(), s.end()), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(s.mask(), 0b1110U);
  EXPECT_EQ(VertexSet::from_mask(0b1110), s);
  EXPECT_THROW(VertexSet({1, 1}), PreconditionError);
  EXPECT_TRUE(VertexSet({1}).is_subset_of(s));
  EXPECT_FALSE(s.intersects(VertexSet{0, 4}));
}

TEST(SignedGraph, TriangleBalanceFollowsSignProduct) {
  for (int mask = 0; mask < 8; ++mask) {
    const int s1 = mask & 1 ? -1 : 1, s2 = mask & 2 ? -1 : 1, s3 = mask & 4 ? -1 : 1;
    const SignedGraph g = triangle(s1, s2, s3);
    EXPECT_EQ(is_balanced(g, g.all_vertices()), s1 * s2 * s3 == 1);
    EXPECT_EQ(triangle_sign(g, g.all_vertices()), s1 * s2 * s3);
  }
}

TEST(SignedGraph, NegativeWitnessIsANegativeCycle) {
  const SignedGraph g = triangle(-1, -1, -1);
  const auto w = negative_cycle_witness(g, g.all_vertices());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->vertices.size(), 3U);
  EXPECT_EQ(cycle_sign(g, w->vertices), -1);
  EXPECT_FALSE(negative_cycle_witness(g, VertexSet{0, 1}).has_value());
}

TEST(SignedGraph, EvenCycleOfNegativesIsBalancedOddIsNot) {
  for (std::size_t n : {4U, 5U, 6U, 7U}) {
    SignedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("c" + std::to_string(i));
    for (VertexId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, -1);
    EXPECT_EQ(is_balanced(g, g.all_vertices()), n % 2 == 0) << n;
    EXPECT_FALSE(is_acyclic(g, g.all_vertices()));
  }
}

TEST(SignedGraph, SwitchingFlipsOnlyCutEdges) {
  const SignedGraph g = triangle(-1, 1, 1);
  const SignedGraph h = switch_at(g, VertexSet{0});
  EXPECT_EQ(h.sign(0, 1), 1);
  EXPECT_EQ(h.sign(0, 2), -1);
  EXPECT_EQ(h.sign(1, 2), 1);
  EXPECT_EQ(switch_at(h, VertexSet{0}), g);
}

TEST(SignedGraph, K4MinusRecognitionIsSwitchingInvariant) {
  SignedGraph g;
  for (const char* n : {"a", "b", "c", "d"}) g.add_vertex(n);
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) g.add_edge(a, b, -1);
  }
  EXPECT_TRUE(is_k4_minus_equivalent(g));
  for (std::uint64_t x = 0; x < 16; ++x) {
    EXPECT_TRUE(is_k4_minus_equivalent(switch_at(g, VertexSet::from_mask(x))));
  }
  g.set_sign(0, 1, 1);
  EXPECT_FALSE(is_k4_minus_equivalent(g));
}

TEST(SignedGraph, AllTrianglesMatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 50; ++k) {
    const SignedGraph g = oracle::random_graph(rng, 7, 60);
    std::set<std::pair<std::uint64_t, int>> want;
    for (VertexId a = 0; a < 7; ++a)
      for (VertexId b = a + 1; b < 7; ++b)
        for (VertexId c = b + 1; c < 7; ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
            want.emplace((1ULL << a) | (1ULL << b) | (1ULL << c),
                         *g.sign(a, b) * *g.sign(b, c) * *g.sign(a, c));
    std::set<std::pair<std::uint64_t, int>> got;
    for (const auto& t : all_triangles(g)) got.emplace(t.vertices.mask(), t.sign);
    EXPECT_EQ(got, want);
  }
}

TEST(SignedGraph, RandomGraphsAgreeWithOracles) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 1 + rng() % 8;
    const SignedGraph g = oracle::random_graph(rng, n, 30 + rng() % 60);
    const std::uint64_t mask = rng() & ((1ULL << n) - 1);
    const VertexSet s = VertexSet::from_mask(mask);
    const bool bal = oracle::balanced(g, mask);
    ASSERT_EQ(is_balanced(g, s), bal);
    ASSERT_EQ(is_acyclic(g, s), oracle::acyclic(g, mask));
    if (const auto w = negative_cycle_witness(g, s)) {
      EXPECT_EQ(cycle_sign(g, w->vertices), -1);
      for (VertexId v : w->vertices) EXPECT_TRUE(s.contains(v));
    }
    if (const auto c = find_cycle(g, s)) {
      EXPECT_GE(c->size(), 3U);
      EXPECT_EQ(std::set<VertexId>(c->begin(), c->end()).size(), c->size());
    }
    // heredity
    for (VertexId v : s) {
      if (bal) {
        EXPECT_TRUE(is_balanced(g, VertexSet::from_mask(mask & ~(1ULL << v))));
      }
    }
    // switching
    const VertexSet x = VertexSet::from_mask(rng() & ((1ULL << n) - 1));
    EXPECT_EQ(is_balanced(switch_at(g, x), s), bal);
  }
}

TEST(SignedGraph, JsonRoundTrip) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    const SignedGraph g = oracle::random_graph(rng, 1 + rng() % 8, 50);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(SignedGraph, ParseRejectsMalformedDocuments) {
  EXPECT_THROW(parse_graph("{"), ParseError);
  EXPECT_THROW(parse_graph(R"({"edges":[]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[{"a":"a","b":"b","sign":2}]})"),
               ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[{"a":"a","b":"a","sign":1}]})"),
               ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","a"]})"), ParseError);
  EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[{"a":"a","b":"b","sign":1},{"a":"b","b":"a","sign":1}]})"),
               ParseError);
}

TEST(SignedGraph, InducedSubgraphKeepsOrderAndSigns) {
  const SignedGraph g = triangle(-1, 1, -1);
  const SignedGraph h = induced_subgraph(g, VertexSet{0, 2});
  ASSERT_EQ(h.vertex_count(), 2U);
  EXPECT_EQ(h.name(0), "a");
  EXPECT_EQ(h.name(1), "c");
  EXPECT_EQ(h.sign(0, 1), -1);
}
