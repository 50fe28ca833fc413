#pragma once

#include <cstdint>

#include "sigcolor/certificate.hpp"
#include "sigcolor/gadgets.hpp"

namespace sigcolor {

inline constexpr int kComposerPalette = 83;
inline constexpr int kComposerColorsPerVertex = 41;

/// Pair overlaps (a12, a13, a23) of the starting coloring of (K3,-).
enum class BaseProfile {
  k14_14_14,
  k14_14_13,
  k14_13_13,
};

struct Composition {
  GadgetGraph graph;
  Certificate certificate;
};

/// Builds the graph of `trace` step by step and carries an (83,41)
/// balanced coloring along in which every edge has 13 or 14 common colors.
/// Inner K4 steps pick apex overlaps by a small feasibility search;
/// substitutions copy one of the two wheel colorings (13 or 14 shared
/// colors on uv, chosen by the host edge) extended to w_prime.
/// Throws CompositionError when an extension is impossible.
Composition compose_8341(const BuildTrace& trace, BaseProfile base = BaseProfile::k14_14_14);

/// Extends an (83,41) coloring of w_hat to w_prime by filling both positive
/// triangles. Needs every positive triangle to carry a rotation-symmetric
/// pattern (all three: alpha, each pair only: pi, each single: sigma) with
/// pi + sigma = 27 and sigma >= 14; throws CompositionError otherwise.
Certificate extend_to_w_prime(const Certificate& wheel);

/// Op2 on every edge of (K3,-), then an inner K4 on every marked triangle
/// the copies brought in (66 vertices).
BuildTrace g_hat_trace();

/// Random valid trace of `depth` steps; deterministic in `seed`.
BuildTrace random_trace(std::uint64_t seed, std::size_t depth,
                        TraceBase base = TraceBase::kK3Minus);

}  // namespace sigcolor
