#include "sigcolor/signed_graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include <nlohmann/json.hpp>

#include "sigcolor/detail/parity_union_find.hpp"
#include "sigcolor/error.hpp"

namespace sigcolor {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw PreconditionError("vertex set contains a duplicate member");
  }
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  s.members_.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    s.members_.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (VertexId v : members_) {
    if (v >= 64) throw PreconditionError("vertex id too large for a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

// ---------------------------------------------------------------------------
// SignedGraph

std::uint64_t SignedGraph::key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

VertexId SignedGraph::add_vertex(std::string name) {
  if (index_.contains(name)) {
    throw PreconditionError("duplicate vertex '" + name + "'");
  }
  const auto id = static_cast<VertexId>(names_.size());
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adjacency_.emplace_back();
  return id;
}

void SignedGraph::add_edge(VertexId a, VertexId b, int sign) {
  if (a >= names_.size() || b >= names_.size()) {
    throw PreconditionError("edge endpoint is not a vertex");
  }
  if (a == b) throw PreconditionError("loop at vertex '" + names_[a] + "'");
  if (sign != kPositive && sign != kNegative) {
    throw PreconditionError("edge sign must be +1 or -1");
  }
  if (a > b) std::swap(a, b);
  if (!edge_index_.emplace(key(a, b), edges_.size()).second) {
    throw PreconditionError("duplicate edge '" + names_[a] + "'-'" + names_[b] + "'");
  }
  edges_.push_back({a, b, sign});
  adjacency_[a].push_back({b, sign});
  adjacency_[b].push_back({a, sign});
}

void SignedGraph::add_edge(std::string_view a, std::string_view b, int sign) {
  add_edge(id(a), id(b), sign);
}

void SignedGraph::set_sign(VertexId a, VertexId b, int sign) {
  if (sign != kPositive && sign != kNegative) {
    throw PreconditionError("edge sign must be +1 or -1");
  }
  auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) throw PreconditionError("set_sign on a non-edge");
  edges_[it->second].sign = sign;
  for (auto& n : adjacency_[a]) if (n.vertex == b) n.sign = sign;
  for (auto& n : adjacency_[b]) if (n.vertex == a) n.sign = sign;
}

std::optional<VertexId> SignedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId SignedGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw PreconditionError("unknown vertex '" + std::string(name) + "'");
}

VertexSet SignedGraph::ids(std::initializer_list<std::string_view> names) const {
  std::vector<VertexId> out;
  for (auto n : names) out.push_back(id(n));
  return VertexSet(std::move(out));
}

VertexSet SignedGraph::ids(std::span<const std::string> names) const {
  std::vector<VertexId> out;
  for (const auto& n : names) out.push_back(id(n));
  return VertexSet(std::move(out));
}

bool SignedGraph::adjacent(VertexId a, VertexId b) const {
  return a != b && edge_index_.contains(key(a, b));
}

std::optional<int> SignedGraph::sign(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  auto it = edge_index_.find(key(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return edges_[it->second].sign;
}

VertexSet SignedGraph::all_vertices() const {
  std::vector<VertexId> all(names_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<VertexId>(i);
  return VertexSet(std::move(all));
}

bool SignedGraph::operator==(const SignedGraph& other) const {
  if (names_ != other.names_ || edges_.size() != other.edges_.size()) return false;
  for (const Edge& e : edges_) {
    if (other.sign(e.a, e.b) != e.sign) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Balance and acyclicity

namespace {

void check_members(const SignedGraph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.vertex_count()) {
    throw PreconditionError("vertex set member is not a vertex of the graph");
  }
}

std::vector<char> membership(const SignedGraph& g, const VertexSet& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : s) in[v] = 1;
  return in;
}

}  // namespace

bool is_balanced(const SignedGraph& g, const VertexSet& s) {
  check_members(g, s);
  const auto in = membership(g, s);
  detail::ParityUnionFind uf(g.vertex_count());
  for (VertexId a : s) {
    for (const Neighbor& n : g.neighbors(a)) {
      if (n.vertex < a || !in[n.vertex]) continue;
      if (uf.unite(a, n.vertex, detail::sign_parity(n.sign)) ==
          detail::ParityUnionFind::Result::kConflict) {
        return false;
      }
    }
  }
  return true;
}

bool is_acyclic(const SignedGraph& g, const VertexSet& s) {
  check_members(g, s);
  const auto in = membership(g, s);
  detail::ParityUnionFind uf(g.vertex_count());
  for (VertexId a : s) {
    for (const Neighbor& n : g.neighbors(a)) {
      if (n.vertex < a || !in[n.vertex]) continue;
      if (uf.unite(a, n.vertex, 0) != detail::ParityUnionFind::Result::kMerged) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// BFS spanning forest of the induced subgraph; returns the fundamental cycle
// of the first non-tree edge accepted by `closes`. `closes` receives the
// sign of the closed cycle.
template <class Pred>
std::optional<std::vector<VertexId>> fundamental_cycle(const SignedGraph& g, const VertexSet& s,
                                                       Pred closes) {
  check_members(g, s);
  const auto in = membership(g, s);
  constexpr VertexId kNone = ~VertexId{0};
  std::vector<VertexId> parent(g.vertex_count(), kNone);
  std::vector<int> depth(g.vertex_count(), -1);
  std::vector<int> potential(g.vertex_count(), 0);  // sign of the tree path to the root

  auto tree_path = [&](VertexId a, VertexId b) {
    // Vertices a .. lca .. b along the tree.
    std::vector<VertexId> up_a, up_b;
    while (depth[a] > depth[b]) { up_a.push_back(a); a = parent[a]; }
    while (depth[b] > depth[a]) { up_b.push_back(b); b = parent[b]; }
    while (a != b) {
      up_a.push_back(a); a = parent[a];
      up_b.push_back(b); b = parent[b];
    }
    up_a.push_back(a);
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
  };

  for (VertexId root : s) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    potential[root] = kPositive;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      const VertexId a = queue.front();
      queue.pop_front();
      for (const Neighbor& n : g.neighbors(a)) {
        const VertexId b = n.vertex;
        if (!in[b]) continue;
        if (depth[b] < 0) {
          depth[b] = depth[a] + 1;
          parent[b] = a;
          potential[b] = potential[a] * n.sign;
          queue.push_back(b);
        } else if (parent[b] != a && parent[a] != b &&
                   closes(potential[a] * potential[b] * n.sign)) {
          return tree_path(a, b);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CycleWitness> negative_cycle_witness(const SignedGraph& g,
                                                   const VertexSet& s) {
  auto cycle = fundamental_cycle(g, s, [](int sign) { return sign == kNegative; });
  if (!cycle) return std::nullopt;
  return CycleWitness{std::move(*cycle), kNegative};
}

std::optional<std::vector<VertexId>> find_cycle(const SignedGraph& g, const VertexSet& s) {
  return fundamental_cycle(g, s, [](int) { return true; });
}

SignedGraph switch_at(const SignedGraph& g, const VertexSet& x) {
  check_members(g, x);
  const auto in = membership(g, x);
  SignedGraph out;
  for (const auto& n : g.names()) out.add_vertex(n);
  for (const Edge& e : g.edges()) {
    out.add_edge(e.a, e.b, in[e.a] != in[e.b] ? -e.sign : e.sign);
  }
  return out;
}

std::vector<Triangle> all_triangles(const SignedGraph& g) {
  std::vector<Triangle> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId a = 0; a < n; ++a) {
    std::vector<Neighbor> higher;
    for (const Neighbor& nb : g.neighbors(a)) if (nb.vertex > a) higher.push_back(nb);
    std::sort(higher.begin(), higher.end(),
              [](const Neighbor& l, const Neighbor& r) { return l.vertex < r.vertex; });
    for (std::size_t i = 0; i < higher.size(); ++i) {
      for (std::size_t j = i + 1; j < higher.size(); ++j) {
        if (auto bc = g.sign(higher[i].vertex, higher[j].vertex)) {
          out.push_back({VertexSet{a, higher[i].vertex, higher[j].vertex},
                         higher[i].sign * higher[j].sign * *bc});
        }
      }
    }
  }
  return out;
}

int triangle_sign(const SignedGraph& g, const VertexSet& t) {
  check_members(g, t);
  if (t.size() != 3) throw PreconditionError("a triangle needs exactly three vertices");
  const auto m = t.members();
  const auto ab = g.sign(m[0], m[1]);
  const auto ac = g.sign(m[0], m[2]);
  const auto bc = g.sign(m[1], m[2]);
  if (!ab || !ac || !bc) throw PreconditionError("vertex triple is not a triangle");
  return *ab * *ac * *bc;
}

bool is_k4_minus_equivalent(const SignedGraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 6) return false;
  const auto triangles = all_triangles(g);
  return triangles.size() == 4 &&
         std::all_of(triangles.begin(), triangles.end(),
                     [](const Triangle& t) { return t.sign == kNegative; });
}

SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s) {
  check_members(g, s);
  SignedGraph out;
  std::vector<VertexId> remap(g.vertex_count(), ~VertexId{0});
  for (VertexId v : s) remap[v] = out.add_vertex(g.name(v));
  for (const Edge& e : g.edges()) {
    if (remap[e.a] != ~VertexId{0} && remap[e.b] != ~VertexId{0}) {
      out.add_edge(remap[e.a], remap[e.b], e.sign);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

SignedGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("graph document needs a \"vertices\" array");
  }
  SignedGraph g;
  try {
    for (const auto& v : doc["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex ids must be strings");
      g.add_vertex(v.get<std::string>());
    }
    if (doc.contains("edges")) {
      if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
      for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("a") || !e.contains("b") || !e.contains("sign") ||
            !e["a"].is_string() || !e["b"].is_string() || !e["sign"].is_number_integer()) {
          throw ParseError("edge needs string \"a\", \"b\" and integer \"sign\"");
        }
        const auto a = e["a"].get<std::string>();
        const auto b = e["b"].get<std::string>();
        const int sign = e["sign"].get<int>();
        if (sign != kPositive && sign != kNegative) {
          throw ParseError("edge sign must be +1 or -1");
        }
        if (a == b) throw ParseError("loop at vertex '" + a + "'");
        const auto ia = g.find(a);
        const auto ib = g.find(b);
        if (!ia || !ib) {
          throw ParseError("unknown vertex in edge '" + a + "'-'" + b + "'");
        }
        if (g.adjacent(*ia, *ib)) throw ParseError("duplicate edge '" + a + "'-'" + b + "'");
        g.add_edge(*ia, *ib, sign);
      }
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return g;
}

std::string serialize_graph(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& l, const Edge& r) {
    return std::tie(l.a, l.b) < std::tie(r.a, r.b);
  });
  json doc;
  doc["vertices"] = json::array();
  for (const auto& n : g.names()) doc["vertices"].push_back(n);
  doc["edges"] = json::array();
  for (const Edge& e : edges) {
    doc["edges"].push_back({{"a", g.name(e.a)}, {"b", g.name(e.b)}, {"sign", e.sign}});
  }
  return doc.dump();
}

}  // namespace sigcolor
