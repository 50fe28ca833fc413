#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sigcolor/gadgets.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

/// Hereditary vertex-set properties: every subset of a qualifying set
/// qualifies as well.
enum class SetProperty {
  kBalanced,  // no negative cycle induced
  kAcyclic,   // no cycle induced at all
};

const char* to_string(SetProperty p);

bool satisfies(const SignedGraph& g, SetProperty property, const VertexSet& s);

inline constexpr std::size_t kMaximalSizeGuard = 24;
inline constexpr std::size_t kFullSizeGuard = 16;

struct EnumerateOptions {
  bool maximal_only = false;
  VertexSet must_contain;
  VertexSet forbid;
  /// Sets may not contain any of these as a whole (keeps heredity).
  std::vector<VertexSet> avoid_whole;
  /// Defaults to kMaximalSizeGuard / kFullSizeGuard depending on mode.
  std::optional<std::size_t> size_guard;
  unsigned threads = 1;
};

struct SetFamily {
  SignedGraph host;
  SetProperty property = SetProperty::kBalanced;
  std::vector<VertexSet> sets;
  bool maximal_only = false;
};

/// Enumerates vertex sets with the property by include/exclude branching
/// over vertices in id order (include first), pruning every include that
/// breaks the property. With `maximal_only`, a leaf is emitted only if no
/// single allowed vertex can be added. Sets must contain `must_contain` and
/// avoid `forbid`; maximality is relative to the non-forbidden vertices.
/// Output is sorted canonically and does not depend on `threads`.
/// Throws GuardExceeded when the host is larger than the size guard.
SetFamily enumerate_sets(const SignedGraph& g, SetProperty property,
                         const EnumerateOptions& options = {});

/// Indices i with s disjoint from marked[i].
std::vector<std::size_t> triangles_missed(const VertexSet& s,
                                          std::span<const VertexSet> marked);

struct MissingTriangleCheck {
  bool holds = true;
  /// A balanced set containing both terminals that meets every marked
  /// triangle, when one exists.
  std::optional<VertexSet> counterexample;
  std::size_t maximal_sets_checked = 0;
};

/// Every balanced set containing terminals u and v misses at least one
/// marked triangle. Checking maximal sets suffices by heredity.
MissingTriangleCheck check_missing_triangle_lemma(const GadgetGraph& g);

/// Balanced sets through both terminals u and v that are maximal in the
/// sense used for the wheel gadget: the maximal ones containing a whole
/// positive triangle, together with the sets that are maximal among
/// balanced sets containing no positive triangle whole. A set of the second
/// kind may be a proper subset of one of the first kind.
std::vector<VertexSet> uv_block_family(const GadgetGraph& g);

struct ForestLemmaReport {
  std::size_t max_acyclic_order = 0;
  std::size_t max_acyclic_order_with_uv = 0;
  std::size_t order5_sets_with_u = 0;
  /// Every maximum (order 5) acyclic set containing u has two of z, t, x1.
  bool order5_with_u_hits_two = true;

  bool matches_expected() const {
    return max_acyclic_order == 5 && max_acyclic_order_with_uv == 4 && order5_with_u_hits_two;
  }
};

/// Brute force over all subsets of the 10-vertex wheel gadget W.
ForestLemmaReport check_forest_lemmas(const GadgetGraph& w);

}  // namespace sigcolor
