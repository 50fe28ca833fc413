#pragma once

// Brute-force reference checks used by the tests. Nothing here calls the
// library's own balance or cycle code.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sigcolor/signed_graph.hpp"

namespace oracle {

using sigcolor::SignedGraph;
using sigcolor::VertexId;

inline bool in(std::uint64_t mask, VertexId v) { return (mask >> v) & 1U; }

// Balanced iff some +-1 labelling s has sign(ab) = s(a) s(b) on every
// induced edge. Tries every labelling.
inline bool balanced(const SignedGraph& g, std::uint64_t mask) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (in(mask, v)) vs.push_back(v);
  }
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;
  for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << vs.size()); ++lab) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!in(mask, e.a) || !in(mask, e.b)) continue;
      const int sa = ((lab >> pos[e.a]) & 1U) ? -1 : 1;
      const int sb = ((lab >> pos[e.b]) & 1U) ? -1 : 1;
      if (sa * sb != e.sign) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Forest iff every component has one edge fewer than vertices.
inline bool acyclic(const SignedGraph& g, std::uint64_t mask) {
  const std::size_t n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (!in(mask, s) || comp[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const auto& e : g.edges()) {
        if (!in(mask, e.a) || !in(mask, e.b)) continue;
        VertexId y;
        if (e.a == x) y = e.b;
        else if (e.b == x) y = e.a;
        else continue;
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
      }
    }
    ++c;
  }
  std::vector<long> verts(c, 0), edges(c, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (in(mask, v)) ++verts[comp[v]];
  }
  for (const auto& e : g.edges()) {
    if (in(mask, e.a) && in(mask, e.b)) ++edges[comp[e.a]];
  }
  for (int i = 0; i < c; ++i) {
    if (edges[i] != verts[i] - 1) return false;
  }
  return true;
}

template <class Pred>
std::vector<std::uint64_t> maximal_sets(const SignedGraph& g, Pred pred,
                                        std::uint64_t must = 0) {
  const std::uint64_t full = (std::uint64_t{1} << g.vertex_count()) - 1;
  std::vector<std::uint64_t> good;
  for (std::uint64_t m = 0; m <= full; ++m) {
    if ((m & must) == must && pred(g, m)) good.push_back(m);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : good) {
    bool maximal = true;
    for (VertexId v = 0; v < g.vertex_count() && maximal; ++v) {
      if (!in(m, v) && pred(g, m | (std::uint64_t{1} << v))) maximal = false;
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

inline SignedGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned density) {
  SignedGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (rng() % 100 < density) g.add_edge(a, b, rng() % 2 ? 1 : -1);
    }
  }
  return g;
}

}  // namespace oracle
