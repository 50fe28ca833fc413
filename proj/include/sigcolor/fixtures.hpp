#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "sigcolor/certificate.hpp"
#include "sigcolor/gadgets.hpp"

namespace sigcolor {

/// Published colorings shipped with the library (data/*.json, embedded at
/// build time and locked by checksum).
enum class Fixture {
  kWheel172,      // (172,85)-coloring of the signed wheel gadget
  kWheel83Tight,  // (83,41), u and v share 13 colors
  kWheel83,       // (83,41), u and v share 14 colors
  kForest52,      // (52,25) forest coloring of the unsigned wheel
};

struct FixtureInfo {
  Fixture fixture;
  std::string_view id;  // file stem, e.g. "wheel_172_85"
  std::string_view text;
  std::uint64_t checksum;
};

std::uint64_t fnv1a64(std::string_view bytes);

std::span<const FixtureInfo> all_fixtures();
const FixtureInfo& fixture_info(Fixture f);
/// Throws PreconditionError for unknown ids.
Fixture fixture_by_id(std::string_view id);

/// Parses the embedded table after checking its checksum; throws
/// std::runtime_error when the data does not match.
Certificate load_fixture(Fixture f);

/// The graph a fixture colors: the signed wheel for the balanced tables,
/// its underlying graph for the forest table.
GadgetGraph fixture_host(Fixture f);

}  // namespace sigcolor
