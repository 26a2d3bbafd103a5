// Seeded randomized properties, runnable on their own: ./property_tests

#include <gtest/gtest.h>

#include "levi/testing/properties.hpp"

using namespace levi::testing;

namespace {

constexpr int kInstances = 200;

void expect_ok(const PropertyResult& r) {
  EXPECT_GE(r.instances, 50) << r.name;
  EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}

}  // namespace

TEST(Properties, BoundarySquaredIsZero) { expect_ok(check_boundary_squared(kInstances)); }

TEST(Properties, EulerCharacteristic) { expect_ok(check_euler_characteristic(kInstances)); }

TEST(Properties, AlexanderDualInvolution) { expect_ok(check_alexander_involution(kInstances)); }

TEST(Properties, StanleyReisnerRoundTrip) { expect_ok(check_stanley_reisner_round_trip(kInstances)); }

TEST(Properties, MatchingAgainstBruteForce) { expect_ok(check_matching_oracle(kInstances)); }

TEST(Properties, CertificatesReverify) { expect_ok(check_certificates(kInstances)); }

TEST(Properties, OtherSeedsAlsoPass) {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    for (const auto& r : run_property_suites(60, seed)) expect_ok(r);
  }
}
