#ifndef ZETAVOL_MONTECARLO_HPP
#define ZETAVOL_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace zetavol::mc {

/// Result of a seeded Monte Carlo run. Identical (seed, samples, target)
/// gives a bit-identical mean for any worker count.
struct MCEstimate {
    double mean = 0.0;
    /// Sample standard deviation / sqrt(samples).
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Describes any domain truncation or exclusion and its bias bound.
    std::optional<std::string> truncation_note;
};

nlohmann::json to_json(const MCEstimate& e);

enum class RegionKind {
    Delta,        ///< u_i >= 0, u_i + u_{i+1} <= 1 (cyclic)
    DeltaScaled,  ///< u_i >= 0, u_i + u_{i+1} <= pi/2 (cyclic)
    URegion,      ///< v_i >= 0, sinh v_i <= cosh v_{i+1} (cyclic)
    Amoeba,       ///< |sinh u| <= cosh v, |sinh v| <= cosh u
};

struct RegionSpec {
    RegionKind kind = RegionKind::Delta;
    unsigned dimension = 2;
    /// Half-side of the sampling box for the unbounded kinds.
    double truncation_radius = 10.0;

    /// Throws std::invalid_argument on a bad dimension or radius.
    void validate() const;
};

/// Throws std::invalid_argument when point.size() != spec.dimension.
bool region_contains(const RegionSpec& spec, std::span<const double> point);

/// Upper bound on the volume of an unbounded region lying outside its
/// sampling box; zero for the bounded kinds.
double truncation_tail_bound(const RegionSpec& spec);

/// Samples per independently seeded chunk.
inline constexpr std::uint64_t kChunkSize = std::uint64_t{1} << 16;

/// Smallest accepted sample count.
inline constexpr std::uint64_t kMinSamples = 10'000;

/// Per-chunk statistics, reported in chunk order.
struct ChunkSummary {
    std::uint64_t index = 0;
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;  ///< sum of squared deviations from the chunk mean
};

struct RunOptions {
    /// Worker threads; 0 picks the hardware concurrency. Never affects results.
    unsigned threads = 0;
    /// When set, receives every chunk summary in chunk order.
    std::vector<ChunkSummary>* chunk_log = nullptr;
};

/// Seed of chunk `chunk` of a run seeded with `seed` (SplitMix64 mixing).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

/// Uniform variates for one chunk.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}
    /// [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// (0, 1); zero draws are resampled.
    double open_uniform() {
        double x;
        do x = uniform();
        while (x == 0.0);
        return x;
    }

private:
    std::mt19937_64 engine_;
};

/// Box volume times hit fraction over a uniform sample of the bounding box
/// ([0,1]^n, [0,pi/2]^n, [0,R]^n or [-R,R]^2). Throws std::invalid_argument
/// when samples < kMinSamples.
MCEstimate mc_volume(const RegionSpec& spec, std::uint64_t samples, std::uint64_t seed, const RunOptions& options = {});

enum class CubeFamily {
    Direct,        ///< 1/(1 - x_1...x_d)                  -> zeta(d)
    Plus,          ///< 1/(1 + x_1...x_d)                  -> (1 - 2^{1-d}) zeta(d)
    Squared,       ///< 1/(1 - x_1^2...x_d^2)              -> (1 - 2^{-d}) zeta(d)
    Log,           ///< -ln x_1 / (1 - x_1...x_d)          -> zeta(d + 1)
    LogSymmetric,  ///< symmetric log form with squares    -> zeta(d + 1)
};

struct WeightedFamily {
    CubeFamily family;
    double weight;
};

/// Exclusion half-width of the (1,1) corner cell used for d = 2 families whose
/// integrand has an infinite second moment there.
inline constexpr double kCornerCell = 1e-6;

/// Plain Monte Carlo average of a single integrand over the open unit cube.
/// Requires dimension >= 2 and samples >= kMinSamples.
MCEstimate mc_cube_integral(CubeFamily family, unsigned dimension, std::uint64_t samples, std::uint64_t seed,
                            const RunOptions& options = {});

/// Average of sum_k weight_k f_k(x) over shared samples, for checking linear
/// identities between integrands.
MCEstimate mc_cube_combination(std::span<const WeightedFamily> terms, unsigned dimension, std::uint64_t samples,
                               std::uint64_t seed, const RunOptions& options = {});

/// The value mc_cube_integral converges to, given zeta(d) and zeta(d+1).
double cube_family_target(CubeFamily family, unsigned dimension, double zeta_d, double zeta_d_plus_1);

}  // namespace zetavol::mc

#endif  // ZETAVOL_MONTECARLO_HPP
