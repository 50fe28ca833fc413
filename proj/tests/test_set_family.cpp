#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "sigcolor/error.hpp"
#include "sigcolor/set_family.hpp"

using namespace sigcolor;

namespace {

std::vector<VertexSet> to_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> out;
  for (auto m : masks) out.push_back(VertexSet::from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> names(const SignedGraph& g, const VertexSet& s) {
  std::vector<std::string> out;
  for (VertexId v : s) out.push_back(g.name(v));
  return out;
}

}  // namespace

TEST(SetFamily, MaximalFamiliesMatchPowerSetFilter) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = 1 + rng() % 9;
    const SignedGraph g = oracle::random_graph(rng, n, 25 + rng() % 70);
    EnumerateOptions opts;
    opts.maximal_only = true;
    EXPECT_EQ(enumerate_sets(g, SetProperty::kBalanced, opts).sets,
              to_sets(oracle::maximal_sets(g, oracle::balanced)));
    EXPECT_EQ(enumerate_sets(g, SetProperty::kAcyclic, opts).sets,
              to_sets(oracle::maximal_sets(g, oracle::acyclic)));
  }
}

TEST(SetFamily, FullFamilyMatchesPowerSetFilter) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + rng() % 7;
    const SignedGraph g = oracle::random_graph(rng, n, 50);
    std::vector<std::uint64_t> want;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      if (oracle::balanced(g, m)) want.push_back(m);
    }
    EXPECT_EQ(enumerate_sets(g, SetProperty::kBalanced).sets, to_sets(want));
  }
}

TEST(SetFamily, ThreadCountDoesNotChangeOutput) {
  const GadgetGraph w = w_prime();
  EnumerateOptions one;
  one.maximal_only = true;
  EnumerateOptions four = one;
  four.threads = 4;
  EXPECT_EQ(enumerate_sets(w.graph, SetProperty::kBalanced, one).sets,
            enumerate_sets(w.graph, SetProperty::kBalanced, four).sets);
}

TEST(SetFamily, ContainAndForbid) {
  const GadgetGraph w = w_hat();
  const SignedGraph& g = w.graph;
  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.must_contain = g.ids({"u", "v"});
  opts.forbid = g.ids({"w"});
  for (const auto& s : enumerate_sets(g, SetProperty::kBalanced, opts).sets) {
    EXPECT_TRUE(opts.must_contain.is_subset_of(s));
    EXPECT_FALSE(s.contains(g.id("w")));
  }
}

TEST(SetFamily, SizeGuards) {
  SignedGraph g;
  for (int i = 0; i < 30; ++i) g.add_vertex("v" + std::to_string(i));
  EnumerateOptions opts;
  opts.maximal_only = true;
  EXPECT_THROW(enumerate_sets(g, SetProperty::kBalanced, opts), GuardExceeded);
  EXPECT_NO_THROW(enumerate_sets(w_prime().graph, SetProperty::kBalanced));
  EXPECT_THROW(enumerate_sets(w_double_prime().graph, SetProperty::kBalanced), GuardExceeded);
}

TEST(SetFamily, WheelBlocksThroughTerminals) {
  const GadgetGraph w = w_hat();
  const SignedGraph& g = w.graph;
  const std::uint64_t uv = g.ids({"u", "v"}).mask();
  // plain maximality, by brute force
  const auto plain = oracle::maximal_sets(g, oracle::balanced, uv);
  std::vector<std::uint64_t> through;
  for (auto m : plain) {
    if ((m & uv) == uv) through.push_back(m);
  }
  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.must_contain = g.ids({"u", "v"});
  EXPECT_EQ(enumerate_sets(g, SetProperty::kBalanced, opts).sets, to_sets(through));
  EXPECT_EQ(through.size(), 8U);

  // the ten blocks: maximal with a whole positive triangle, plus maximal
  // among sets keeping every positive triangle incomplete
  std::vector<std::uint64_t> pos;
  for (const auto& t : all_triangles(g)) {
    if (t.sign == kPositive) pos.push_back(t.vertices.mask());
  }
  auto avoids = [&](const SignedGraph& h, std::uint64_t m) {
    return oracle::balanced(h, m) &&
           std::none_of(pos.begin(), pos.end(), [&](auto t) { return (m & t) == t; });
  };
  std::vector<std::uint64_t> want;
  for (auto m : through) {
    if (!avoids(g, m)) want.push_back(m);
  }
  for (auto m : oracle::maximal_sets(g, avoids, uv)) {
    if ((m & uv) == uv) want.push_back(m);
  }
  auto sets = to_sets(want);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  EXPECT_EQ(uv_block_family(w), sets);
  ASSERT_EQ(sets.size(), 10U);

  std::vector<std::vector<std::string>> listed;
  for (const auto& s : sets) listed.push_back(names(g, s));
  const std::vector<std::vector<std::string>> expected{
      {"u", "v", "x1", "x2", "x4"}, {"u", "v", "x1", "x3", "x4"}, {"u", "v", "w", "x1", "x4"},
      {"u", "v", "w", "x2"},        {"u", "v", "w", "x3"},        {"u", "v", "w", "x5"},
      {"u", "v", "x1", "x3"},       {"u", "v", "x2", "x5"},       {"u", "v", "x2", "x4"},
      {"u", "v", "x3", "x5"}};
  for (const auto& e : expected) {
    EXPECT_NE(std::find(listed.begin(), listed.end(), e), listed.end());
  }
}

TEST(SetFamily, MissingTriangleLemma) {
  const auto on_prime = check_missing_triangle_lemma(w_prime());
  EXPECT_TRUE(on_prime.holds);
  EXPECT_FALSE(on_prime.counterexample.has_value());
  // the bare wheel has a balanced set through u,v meeting all five faces
  const GadgetGraph w = w_hat();
  const auto on_hat = check_missing_triangle_lemma(w);
  EXPECT_FALSE(on_hat.holds);
  ASSERT_TRUE(on_hat.counterexample.has_value());
  EXPECT_TRUE(is_balanced(w.graph, *on_hat.counterexample));
  EXPECT_TRUE(triangles_missed(*on_hat.counterexample, w.marked_triangles).empty());
}

TEST(SetFamily, ForestLemmas) {
  const GadgetGraph w = w_underlying();
  const SignedGraph& g = w.graph;
  const std::size_t n = g.vertex_count();
  const std::uint64_t u = 1ULL << g.id("u"), v = 1ULL << g.id("v");
  const std::uint64_t zt1 =
      (1ULL << g.id("z")) | (1ULL << g.id("t")) | (1ULL << g.id("x1"));
  std::size_t best = 0, best_uv = 0;
  bool hits_two = true;
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
    if (!oracle::acyclic(g, m)) continue;
    const std::size_t k = std::popcount(m);
    best = std::max(best, k);
    if ((m & u) && (m & v)) best_uv = std::max(best_uv, k);
  }
  for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
    if (std::popcount(m) == static_cast<int>(best) && (m & u) && oracle::acyclic(g, m)) {
      hits_two = hits_two && std::popcount(m & zt1) >= 2;
    }
  }
  const ForestLemmaReport rep = check_forest_lemmas(w);
  EXPECT_EQ(rep.max_acyclic_order, best);
  EXPECT_EQ(rep.max_acyclic_order_with_uv, best_uv);
  EXPECT_EQ(rep.order5_with_u_hits_two, hits_two);
  EXPECT_TRUE(rep.matches_expected());
}
