#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sigcolor/cover_lp.hpp"
#include "sigcolor/signed_graph.hpp"

namespace sigcolor {

enum class CertificateMode {
  kBalanced,  // every color class induces no negative cycle
  kForest,    // every color class induces no cycle
};

/// A color class used `rep` times. Members are vertex names; the order
/// stored is sorted lexicographically so equal sets compare equal.
struct ColorClass {
  std::vector<std::string> members;
  std::int64_t rep = 0;

  bool contains(std::string_view v) const;
};

/// A (p, q)-coloring written as a multiset of vertex sets: q colors per
/// vertex out of a palette of p colors. Individual color identities are not
/// recorded.
struct Certificate {
  std::int64_t p = 0;
  std::int64_t q = 0;
  CertificateMode mode = CertificateMode::kBalanced;
  std::vector<ColorClass> classes;

  /// Sum of all repetitions (colors actually used).
  std::int64_t colors_used() const;
};

/// Sorts each class and merges classes with equal vertex sets (reps add);
/// first occurrence order is kept.
Certificate merge_duplicate_classes(const Certificate& c);

Certificate parse_certificate(std::string_view text);
std::string serialize_certificate(const Certificate& c);

struct Finding {
  enum class Kind {
    kUnknownVertex,
    kEmptyClass,
    kNonPositiveRep,
    kUnbalancedClass,
    kCyclicClass,
    kPaletteOverflow,
    kUndercovered,
  };
  Kind kind;
  std::string message;
  std::optional<std::size_t> class_index;
  /// Offending cycle (vertex names in cyclic order) for class findings.
  std::vector<std::string> cycle;
};

const char* to_string(Finding::Kind kind);

struct VerifyReport {
  bool ok = false;
  /// Coverage per vertex, in the graph's canonical vertex order.
  std::vector<std::pair<std::string, std::int64_t>> coverage;
  std::int64_t colors_used = 0;
  std::vector<Finding> violations;

  std::int64_t coverage_of(std::string_view v) const;
};

/// Checks every class against the mode's property, that the classes fit in
/// the palette, and that every vertex is covered at least q times.
/// Failures are reported as findings, never thrown.
VerifyReport verify(const SignedGraph& g, const Certificate& c);

/// Total rep of classes containing both x and y.
std::int64_t overlap(const Certificate& c, std::string_view x, std::string_view y);

/// Total rep of classes disjoint from t, plus the unused palette colors.
std::int64_t triangle_missing_count(const Certificate& c,
                                    const std::array<std::string, 3>& t);

/// Total rep of classes containing all three vertices of t.
std::int64_t triangle_full_count(const Certificate& c, const std::array<std::string, 3>& t);

/// Negative triangles: at most `threshold` colors miss t. Positive
/// triangles: at most `threshold` colors sit on all of t. The strict
/// triangle property is threshold 0.
bool triangle_property_audit(const Certificate& c, const std::array<std::string, 3>& t,
                             int sign, std::int64_t threshold = 0);

/// Pairwise overlaps and exactly-one counts restricted to `terminals`.
struct OverlapProfile {
  std::map<std::pair<std::string, std::string>, std::int64_t> pairs;
  std::map<std::string, std::int64_t> singles;
};

OverlapProfile profile(const Certificate& c, std::span<const std::string> terminals);

/// Scales an LP solution to integers: q is the lcm of the weight
/// denominators, each rep is weight * q, and p the sum of reps.
Certificate lp_to_certificate(const SignedGraph& g, const LpResult& r, CertificateMode mode);

}  // namespace sigcolor
