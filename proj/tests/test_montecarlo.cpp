#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "zetavol/montecarlo.hpp"
#include "zetavol/zeta.hpp"

using namespace zetavol;
using namespace zetavol::mc;

namespace {

constexpr double kPi = std::numbers::pi;

bool within(const MCEstimate& e, double target, double sigmas = 3.0) {
    return std::abs(e.mean - target) <= sigmas * e.std_error;
}

}  // namespace

TEST_CASE("region membership") {
    const RegionSpec delta{RegionKind::Delta, 2};
    CHECK(region_contains(delta, std::vector{0.3, 0.3}));
    CHECK_FALSE(region_contains(delta, std::vector{0.6, 0.6}));
    CHECK_FALSE(region_contains(delta, std::vector{-0.1, 0.3}));
    const RegionSpec d3{RegionKind::Delta, 3};
    // cyclic: u_3 + u_1 <= 1 matters
    CHECK_FALSE(region_contains(d3, std::vector{0.6, 0.1, 0.6}));
    CHECK(region_contains(RegionSpec{RegionKind::DeltaScaled, 2}, std::vector{0.7, 0.7}));
    const RegionSpec amoeba{RegionKind::Amoeba, 2};
    CHECK(region_contains(amoeba, std::vector{0.0, 0.0}));
    CHECK_FALSE(region_contains(amoeba, std::vector{5.0, 0.0}));
    CHECK(region_contains(RegionSpec{RegionKind::URegion, 3}, std::vector{0.5, 0.5, 0.5}));
    CHECK_THROWS_AS(region_contains(delta, std::vector{0.1, 0.1, 0.1}), std::invalid_argument);
    CHECK_THROWS_AS(RegionSpec({RegionKind::Amoeba, 3}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(RegionSpec({RegionKind::Delta, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(RegionSpec({RegionKind::URegion, 3, 0.0}).validate(), std::invalid_argument);
}

TEST_CASE("amoeba membership symmetries") {
    const RegionSpec amoeba{RegionKind::Amoeba, 2};
    Sampler s(11);
    for (int i = 0; i < 2000; ++i) {
        const double u = -4.0 + 8.0 * s.uniform(), v = -4.0 + 8.0 * s.uniform();
        const bool in = region_contains(amoeba, std::vector{u, v});
        CHECK(region_contains(amoeba, std::vector{-u, -v}) == in);
        CHECK(region_contains(amoeba, std::vector{v, u}) == in);
    }
}

TEST_CASE("truncation tail bounds") {
    const double u3 = truncation_tail_bound({RegionKind::URegion, 3, 10.0});
    CHECK(u3 > 0.0);
    CHECK(u3 < 1e-4);
    CHECK(truncation_tail_bound({RegionKind::Amoeba, 2, 10.0}) < 1e-7);
    CHECK(truncation_tail_bound({RegionKind::Delta, 4}) == 0.0);
    CHECK(truncation_tail_bound({RegionKind::URegion, 3, 12.0}) < u3);
}

TEST_CASE("results are identical for any worker count") {
    const RegionSpec spec{RegionKind::Delta, 4};
    const MCEstimate one = mc_volume(spec, 300'000, 42, {.threads = 1});
    const MCEstimate many = mc_volume(spec, 300'000, 42, {.threads = 8});
    CHECK(one.mean == many.mean);
    CHECK(one.std_error == many.std_error);
    CHECK(mc_volume(spec, 300'000, 43, {.threads = 2}).mean != one.mean);
}

TEST_CASE("chunk log covers every sample in order") {
    std::vector<ChunkSummary> log;
    const std::uint64_t samples = 3 * kChunkSize + 17;
    const MCEstimate e = mc_volume({RegionKind::Delta, 2}, samples, 5, {.threads = 3, .chunk_log = &log});
    REQUIRE(log.size() == 4);
    std::uint64_t total = 0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < log.size(); ++i) {
        CHECK(log[i].index == i);
        total += log[i].count;
        weighted += log[i].mean * static_cast<double>(log[i].count);
    }
    CHECK(total == samples);
    CHECK(log.back().count == 17);
    CHECK(weighted / static_cast<double>(samples) == doctest::Approx(e.mean).epsilon(1e-12));
    CHECK(chunk_seed(5, 0) != chunk_seed(5, 1));
    CHECK(chunk_seed(5, 0) != chunk_seed(6, 0));
}

TEST_CASE("sample count and dimension validation") {
    CHECK_THROWS_AS(mc_volume({RegionKind::Delta, 2}, 9'999, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_cube_integral(CubeFamily::Direct, 1, 100'000, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_cube_integral(CubeFamily::Direct, 2, 100, 1), std::invalid_argument);
}

TEST_CASE("region volumes") {
    CHECK(within(mc_volume({RegionKind::Delta, 2}, 400'000, 1), 0.5));
    CHECK(within(mc_volume({RegionKind::Delta, 3}, 400'000, 2), 0.25));
    CHECK(within(mc_volume({RegionKind::DeltaScaled, 2}, 400'000, 3), kPi * kPi / 8.0));
    const MCEstimate u2 = mc_volume({RegionKind::URegion, 2}, 400'000, 4);
    CHECK(within(u2, 0.75 * kPi * kPi / 6.0));
    REQUIRE(u2.truncation_note.has_value());
    CHECK_FALSE(mc_volume({RegionKind::Delta, 2}, 20'000, 1).truncation_note.has_value());
}

TEST_CASE("cube integrals") {
    const double z2 = kPi * kPi / 6.0, z3 = zeta_series(3.0, 1e-12).value, z4 = std::pow(kPi, 4) / 90.0;
    const MCEstimate direct = mc_cube_integral(CubeFamily::Direct, 2, 400'000, 9);
    CHECK(within(direct, z2));
    REQUIRE(direct.truncation_note.has_value());
    CHECK(within(mc_cube_integral(CubeFamily::Squared, 2, 400'000, 10), 0.75 * z2));
    CHECK(within(mc_cube_integral(CubeFamily::Plus, 2, 400'000, 11), 0.5 * z2));
    CHECK(within(mc_cube_integral(CubeFamily::Log, 2, 400'000, 12), z3));
    CHECK(within(mc_cube_integral(CubeFamily::LogSymmetric, 2, 400'000, 13), z3));
    CHECK(within(mc_cube_integral(CubeFamily::Squared, 3, 400'000, 14), 0.875 * z3));
    CHECK(within(mc_cube_integral(CubeFamily::Log, 3, 400'000, 15), z4));
    CHECK_FALSE(mc_cube_integral(CubeFamily::Log, 3, 20'000, 1).truncation_note.has_value());
    CHECK(cube_family_target(CubeFamily::Squared, 2, z2, z3) == doctest::Approx(0.75 * z2));
    CHECK(cube_family_target(CubeFamily::Plus, 3, 1.0, 0.0) == doctest::Approx(0.75));
}

TEST_CASE("linear identities between integrands") {
    // 1/(1-p) + 1/(1+p) = 2/(1-p^2) pointwise, so the paired mean is ~0.
    const std::vector<WeightedFamily> sum{{CubeFamily::Direct, 1.0}, {CubeFamily::Plus, 1.0}, {CubeFamily::Squared, -2.0}};
    const MCEstimate e5 = mc_cube_combination(sum, 2, 200'000, 21);
    CHECK(std::abs(e5.mean) <= 1e-9);
    const std::vector<WeightedFamily> diff{{CubeFamily::Direct, 0.5}, {CubeFamily::Plus, -1.0}};
    CHECK(within(mc_cube_combination(diff, 2, 400'000, 22), 0.0));
}

TEST_CASE("coverage over independent seeds") {
    int misses = 0;
    for (std::uint64_t seed = 100; seed < 120; ++seed)
        if (!within(mc_volume({RegionKind::Delta, 3}, 50'000, seed), 0.25)) ++misses;
    CHECK(misses <= 1);
}

TEST_CASE("JSON form") {
    const auto j = to_json(mc_volume({RegionKind::URegion, 2}, 20'000, 3));
    CHECK(j["seed"] == 3);
    CHECK(j["samples"] == 20'000);
    CHECK(j["truncation_note"].is_string());
    CHECK(to_json(mc_volume({RegionKind::Delta, 2}, 20'000, 3))["truncation_note"].is_null());
}
