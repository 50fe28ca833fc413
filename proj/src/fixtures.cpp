#include "sigcolor/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "fixtures_data.hpp"
#include "sigcolor/error.hpp"

namespace sigcolor {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

// Checksums of the transcribed tables; update only together with the data.
constexpr std::array<FixtureInfo, 4> kFixtures{{
    {Fixture::kWheel172, "wheel_172_85", embedded::kWheel172, 0x82f18caef5f84493ULL},
    {Fixture::kWheel83Tight, "wheel_83_41_tight", embedded::kWheel83Tight, 0x6a17eaa0ac0d7bd1ULL},
    {Fixture::kWheel83, "wheel_83_41", embedded::kWheel83, 0x3399e9c60718379bULL},
    {Fixture::kForest52, "forest_52_25", embedded::kForest52, 0x216c2552d515adc2ULL},
}};

}  // namespace

std::span<const FixtureInfo> all_fixtures() { return kFixtures; }

const FixtureInfo& fixture_info(Fixture f) {
  for (const auto& info : kFixtures) {
    if (info.fixture == f) return info;
  }
  throw PreconditionError("unknown fixture");
}

Fixture fixture_by_id(std::string_view id) {
  for (const auto& info : kFixtures) {
    if (info.id == id) return info.fixture;
  }
  throw PreconditionError("unknown fixture '" + std::string(id) + "'");
}

Certificate load_fixture(Fixture f) {
  const FixtureInfo& info = fixture_info(f);
  if (fnv1a64(info.text) != info.checksum) {
    throw std::runtime_error("fixture " + std::string(info.id) + " fails its checksum");
  }
  return parse_certificate(info.text);
}

GadgetGraph fixture_host(Fixture f) {
  return f == Fixture::kForest52 ? w_underlying() : w_hat();
}

}  // namespace sigcolor
