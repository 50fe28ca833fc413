#include <gtest/gtest.h>

#include "sigcolor/composer.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/fixtures.hpp"

using namespace sigcolor;

namespace {

// Recounts from the certificate classes directly.
std::int64_t shared(const Certificate& c, const std::string& a, const std::string& b) {
  std::int64_t s = 0;
  for (const auto& k : c.classes) {
    if (k.contains(a) && k.contains(b)) s += k.rep;
  }
  return s;
}

void expect_8341(const Composition& comp) {
  const SignedGraph& g = comp.graph.graph;
  EXPECT_EQ(comp.certificate.p, 83);
  EXPECT_EQ(comp.certificate.q, 41);
  const VerifyReport r = verify(g, comp.certificate);
  EXPECT_TRUE(r.ok);
  for (const auto& [v, k] : r.coverage) EXPECT_EQ(k, 41) << v;
  for (const Edge& e : g.edges()) {
    const auto k = shared(comp.certificate, g.name(e.a), g.name(e.b));
    EXPECT_TRUE(k == 13 || k == 14) << g.name(e.a) << g.name(e.b) << " " << k;
  }
  for (const auto& k : comp.certificate.classes) {
    EXPECT_TRUE(is_balanced(g, g.ids(k.members)));
  }
}

}  // namespace

TEST(Composer, EmptyTraceAllBases) {
  for (BaseProfile b : {BaseProfile::k14_14_14, BaseProfile::k14_14_13, BaseProfile::k14_13_13}) {
    const Composition c = compose_8341({}, b);
    EXPECT_EQ(c.graph.graph.vertex_count(), 3U);
    expect_8341(c);
  }
  const Composition c = compose_8341({}, BaseProfile::k14_13_13);
  EXPECT_EQ(shared(c.certificate, "a", "b") + shared(c.certificate, "a", "c") +
                shared(c.certificate, "b", "c"),
            14 + 13 + 13);
}

TEST(Composer, SingleSteps) {
  BuildTrace apex;
  apex.steps.push_back(InnerK4Step{{"a", "b", "c"}});
  expect_8341(compose_8341(apex));
  BuildTrace sub;
  sub.steps.push_back(SubstituteStep{{"b", "c"}});
  const Composition c = compose_8341(sub);
  EXPECT_EQ(c.graph.graph.vertex_count(), 3U + 14U);
  expect_8341(c);
}

TEST(Composer, FullK3Trace) {
  const Composition c = compose_8341(g_hat_trace());
  EXPECT_EQ(c.graph.graph.vertex_count(), 66U);
  expect_8341(c);
}

TEST(Composer, K4Base) {
  BuildTrace t;
  t.base = TraceBase::kK4Minus;
  t.steps.push_back(SubstituteStep{{"c", "d"}});
  t.steps.push_back(InnerK4Step{{"a", "b", "d"}});
  expect_8341(compose_8341(t));
}

TEST(Composer, RandomTraces) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BuildTrace t = random_trace(seed, 1 + seed % 5);
    ASSERT_NO_THROW(expect_8341(compose_8341(t))) << serialize_trace(t);
  }
  EXPECT_EQ(serialize_trace(random_trace(5, 4)), serialize_trace(random_trace(5, 4)));
}

TEST(Composer, WheelExtension) {
  for (Fixture f : {Fixture::kWheel83Tight, Fixture::kWheel83}) {
    const Certificate c = extend_to_w_prime(load_fixture(f));
    const GadgetGraph wp = w_prime();
    EXPECT_TRUE(verify(wp.graph, c).ok);
    EXPECT_EQ(shared(c, "u", "v"), shared(load_fixture(f), "u", "v"));
    for (const Edge& e : wp.graph.edges()) {
      const auto k = shared(c, wp.graph.name(e.a), wp.graph.name(e.b));
      EXPECT_TRUE(k == 13 || k == 14) << wp.graph.name(e.a) << wp.graph.name(e.b);
    }
  }
  EXPECT_THROW(extend_to_w_prime(load_fixture(Fixture::kWheel172)), CompositionError);
}
