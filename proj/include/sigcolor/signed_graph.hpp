#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sigcolor {

using VertexId = std::uint32_t;

/// Edge signs are stored as +1 / -1.
inline constexpr int kPositive = 1;
inline constexpr int kNegative = -1;

struct Edge {
  VertexId a;
  VertexId b;
  int sign;

  bool operator==(const Edge&) const = default;
};

struct Neighbor {
  VertexId vertex;
  int sign;
};

/// Sorted, duplicate-free set of vertex ids. Canonical order is the host
/// graph's declaration order, i.e. ascending id.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts the input; throws PreconditionError on duplicates.
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members)
      : VertexSet(std::vector<VertexId>(members)) {}

  static VertexSet from_mask(std::uint64_t mask);

  std::span<const VertexId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  /// Only valid when every member is < 64.
  std::uint64_t mask() const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

/// Simple undirected graph with a sign on every edge.
///
/// Vertices carry string names; ids are dense and follow declaration order.
/// No loops and no parallel edges are ever admitted.
class SignedGraph {
 public:
  /// Throws PreconditionError if the name is already taken.
  VertexId add_vertex(std::string name);
  /// Throws PreconditionError on loops, parallel edges, unknown ids or a
  /// sign other than +1/-1.
  void add_edge(VertexId a, VertexId b, int sign);
  void add_edge(std::string_view a, std::string_view b, int sign);
  /// Overwrites the sign of an existing edge.
  void set_sign(VertexId a, VertexId b, int sign);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v); }
  std::span<const std::string> names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws PreconditionError for unknown names.
  VertexId id(std::string_view name) const;
  VertexSet ids(std::initializer_list<std::string_view> names) const;
  VertexSet ids(std::span<const std::string> names) const;

  /// Edges in insertion order, each with a < b.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_.at(v); }
  bool adjacent(VertexId a, VertexId b) const;
  /// Sign of edge ab, or nullopt when a and b are not adjacent.
  std::optional<int> sign(VertexId a, VertexId b) const;

  VertexSet all_vertices() const;

  /// Structural equality: same names in the same order, same signed edge set.
  bool operator==(const SignedGraph& other) const;

 private:
  static std::uint64_t key(VertexId a, VertexId b);

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;
};

/// Cycle inside a vertex set whose edge-sign product is -1. Vertices are
/// listed in cyclic order; consecutive pairs (and last/first) are edges.
struct CycleWitness {
  std::vector<VertexId> vertices;
  int sign = kNegative;
};

/// True iff the subgraph induced by `s` has no negative cycle.
bool is_balanced(const SignedGraph& g, const VertexSet& s);

/// A negative cycle of the subgraph induced by `s`, or nullopt when balanced.
std::optional<CycleWitness> negative_cycle_witness(const SignedGraph& g,
                                                   const VertexSet& s);

/// True iff the subgraph induced by `s` is a forest (signs ignored).
bool is_acyclic(const SignedGraph& g, const VertexSet& s);

/// Any cycle of the subgraph induced by `s` (signs ignored), in cyclic
/// order, or nullopt when the induced subgraph is a forest.
std::optional<std::vector<VertexId>> find_cycle(const SignedGraph& g, const VertexSet& s);

/// Negates every edge with exactly one endpoint in `x`.
SignedGraph switch_at(const SignedGraph& g, const VertexSet& x);

struct Triangle {
  VertexSet vertices;
  int sign;
};

/// Every 3-clique with its sign product, sorted by vertex ids.
std::vector<Triangle> all_triangles(const SignedGraph& g);

/// Sign product over an explicit triangle; throws if it is not a 3-clique.
int triangle_sign(const SignedGraph& g, const VertexSet& t);

/// Underlying graph is K4 and every triangle is negative.
bool is_k4_minus_equivalent(const SignedGraph& g);

/// Subgraph induced by `s`, vertex order preserved.
SignedGraph induced_subgraph(const SignedGraph& g, const VertexSet& s);

/// Graph JSON: {"vertices":[...],"edges":[{"a":..,"b":..,"sign":±1},...]}.
SignedGraph parse_graph(std::string_view text);
/// Vertices in canonical order, edges sorted by (a, b) in canonical order.
std::string serialize_graph(const SignedGraph& g);

}  // namespace sigcolor
