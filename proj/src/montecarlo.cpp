#include "zetavol/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zetavol::mc {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Runs `draw` samples times across fixed-size chunks and merges the chunk
// statistics in chunk order (Chan et al. pairwise update), so the result does
// not depend on how chunks are spread over threads.
template <class Draw>
MCEstimate run_chunks(std::uint64_t samples, std::uint64_t seed, const RunOptions& options, const Draw& draw) {
    if (samples < kMinSamples)
        throw std::invalid_argument("Monte Carlo sample count must be at least " + std::to_string(kMinSamples));
    const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkSummary> summaries(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        Sampler sampler(chunk_seed(seed, c));
        const std::uint64_t count = std::min(kChunkSize, samples - c * kChunkSize);
        double mean = 0.0, m2 = 0.0;
        for (std::uint64_t i = 0; i < count; ++i) {
            const double x = draw(sampler);
            const double d = x - mean;
            mean += d / static_cast<double>(i + 1);
            m2 += d * (x - mean);
        }
        summaries[c] = {c, count, mean, m2};
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++) run_chunk(c);
            });
    }

    double mean = 0.0, m2 = 0.0;
    double count = 0.0;
    for (const auto& s : summaries) {
        const double n_b = static_cast<double>(s.count);
        const double total = count + n_b;
        const double delta = s.mean - mean;
        mean += delta * n_b / total;
        m2 += s.m2 + delta * delta * count * n_b / total;
        count = total;
    }
    if (options.chunk_log) *options.chunk_log = summaries;

    MCEstimate e;
    e.mean = mean;
    e.samples = samples;
    e.seed = seed;
    e.std_error = std::sqrt(m2 / (count - 1.0)) / std::sqrt(count);
    return e;
}

bool cyclic_polytope_contains(std::span<const double> u, double bound) {
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i)
        if (u[i] < 0.0 || u[i] + u[(i + 1) % n] > bound) return false;
    return true;
}

bool u_region_contains(std::span<const double> v) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        if (v[i] < 0.0 || std::sinh(v[i]) > std::cosh(v[(i + 1) % n])) return false;
    return true;
}

// Volume of U_n outside [0, R]^n. With m the smallest coordinate every cyclic
// drop v_i - v_{i+1} is at most ln(1 + 2 e^{-2m}) <= 2 e^{-2m}; bootstrapping
// this twice confines the coordinates to a band of width
// 2n e^{2 d1} e^{-2M} below the largest one, M, where d1 = 2n e^{-2(R - 2n)}.
double u_region_tail(unsigned n, double radius) {
    const double dn = n;
    const double d1 = 2.0 * dn * std::exp(-2.0 * (radius - 2.0 * dn));
    return dn * std::pow(2.0 * dn, dn - 1.0) * std::exp(2.0 * (dn - 1.0) * (d1 - radius)) / (2.0 * (dn - 1.0));
}

std::string format_bound(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

double cube_value(CubeFamily family, unsigned dimension, double product, double log_first, double log_product) {
    switch (family) {
        case CubeFamily::Direct:
            return 1.0 / (1.0 - product);
        case CubeFamily::Plus:
            return 1.0 / (1.0 + product);
        case CubeFamily::Squared:
            return 1.0 / ((1.0 - product) * (1.0 + product));
        case CubeFamily::Log:
            return -log_first / (1.0 - product);
        case CubeFamily::LogSymmetric: {
            const double n = dimension + 1.0;
            const double scale = std::ldexp(1.0, static_cast<int>(dimension + 1));
            return -(scale / (scale - 1.0)) / (n - 1.0) * log_product / ((1.0 - product) * (1.0 + product));
        }
    }
    return 0.0;
}

// Families with an infinite second moment at the (1,1) corner when d = 2.
bool corner_singular(CubeFamily f) {
    return f == CubeFamily::Direct || f == CubeFamily::Plus || f == CubeFamily::Squared;
}

// Bias from dropping the corner cell: int over [1-c,1]^2 of 1/(1 - xy) is at
// most 2 c ln 2 / (1 - c); 1/(1 - x^2 y^2) is smaller and 1/(1 + xy) <= 1.
double corner_bias(CubeFamily f) {
    if (f == CubeFamily::Plus) return kCornerCell * kCornerCell;
    return 2.0 * kCornerCell * std::numbers::ln2 / (1.0 - kCornerCell);
}

}  // namespace

nlohmann::json to_json(const MCEstimate& e) {
    nlohmann::json j;
    j["mean"] = e.mean;
    j["std_error"] = e.std_error;
    j["samples"] = e.samples;
    j["seed"] = e.seed;
    j["truncation_note"] = e.truncation_note ? nlohmann::json(*e.truncation_note) : nlohmann::json(nullptr);
    return j;
}

void RegionSpec::validate() const {
    if (kind == RegionKind::Amoeba && dimension != 2) throw std::invalid_argument("amoeba region is two-dimensional");
    if (dimension < 2) throw std::invalid_argument("region dimension must be >= 2");
    if ((kind == RegionKind::URegion || kind == RegionKind::Amoeba) && !(truncation_radius > 0.0))
        throw std::invalid_argument("truncation radius must be positive");
}

bool region_contains(const RegionSpec& spec, std::span<const double> point) {
    spec.validate();
    if (point.size() != spec.dimension)
        throw std::invalid_argument("point has dimension " + std::to_string(point.size()) + ", region expects " +
                                    std::to_string(spec.dimension));
    switch (spec.kind) {
        case RegionKind::Delta:
            return cyclic_polytope_contains(point, 1.0);
        case RegionKind::DeltaScaled:
            return cyclic_polytope_contains(point, kHalfPi);
        case RegionKind::URegion:
            return u_region_contains(point);
        case RegionKind::Amoeba: {
            const double u = point[0], v = point[1];
            return std::abs(std::sinh(u)) <= std::cosh(v) && std::abs(std::sinh(v)) <= std::cosh(u);
        }
    }
    return false;
}

double truncation_tail_bound(const RegionSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case RegionKind::URegion:
            return u_region_tail(spec.dimension, spec.truncation_radius);
        case RegionKind::Amoeba:
            // The amoeba is four mirror images of U_2.
            return 4.0 * u_region_tail(2, spec.truncation_radius);
        default:
            return 0.0;
    }
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    return splitmix64(splitmix64(seed) ^ splitmix64(chunk + 0x632be59bd9b4e019ULL));
}

MCEstimate mc_volume(const RegionSpec& spec, std::uint64_t samples, std::uint64_t seed, const RunOptions& options) {
    spec.validate();
    const unsigned n = spec.dimension;
    double lo = 0.0, side = 1.0;
    switch (spec.kind) {
        case RegionKind::Delta:
            break;
        case RegionKind::DeltaScaled:
            side = kHalfPi;
            break;
        case RegionKind::URegion:
            side = spec.truncation_radius;
            break;
        case RegionKind::Amoeba:
            lo = -spec.truncation_radius;
            side = 2.0 * spec.truncation_radius;
            break;
    }
    const double box = std::pow(side, static_cast<double>(n));
    MCEstimate e = run_chunks(samples, seed, options, [&](Sampler& s) {
        double point[64];
        for (unsigned i = 0; i < n; ++i) point[i] = lo + side * s.uniform();
        return region_contains(spec, std::span<const double>(point, n)) ? box : 0.0;
    });
    if (spec.kind == RegionKind::URegion || spec.kind == RegionKind::Amoeba) {
        e.truncation_note = "sampling box " + std::string(spec.kind == RegionKind::Amoeba ? "[-R,R]^2" : "[0,R]^n") +
                            " with R = " + format_bound(spec.truncation_radius) +
                            "; omitted volume outside the box <= " + format_bound(truncation_tail_bound(spec));
    }
    return e;
}

MCEstimate mc_cube_combination(std::span<const WeightedFamily> terms, unsigned dimension, std::uint64_t samples,
                               std::uint64_t seed, const RunOptions& options) {
    if (dimension < 2) throw std::invalid_argument("cube integral dimension must be >= 2");
    if (dimension > 64) throw std::invalid_argument("cube integral dimension must be <= 64");
    if (terms.empty()) throw std::invalid_argument("cube integral needs at least one integrand");
    const std::vector<WeightedFamily> local(terms.begin(), terms.end());
    const bool corner = dimension == 2 && std::any_of(local.begin(), local.end(), [](const WeightedFamily& t) {
                            return corner_singular(t.family);
                        });

    MCEstimate e = run_chunks(samples, seed, options, [&](Sampler& s) {
        double product = 1.0, log_product = 0.0, log_first = 0.0;
        bool in_corner = corner;
        for (unsigned i = 0; i < dimension; ++i) {
            const double x = s.open_uniform();
            product *= x;
            const double lx = std::log(x);
            log_product += lx;
            if (i == 0) log_first = lx;
            in_corner = in_corner && (1.0 - x) < kCornerCell;
        }
        double value = 0.0;
        for (const auto& t : local) {
            if (in_corner && corner_singular(t.family)) continue;
            value += t.weight * cube_value(t.family, dimension, product, log_first, log_product);
        }
        return value;
    });
    if (corner) {
        double bias = 0.0;
        for (const auto& t : local)
            if (corner_singular(t.family)) bias += std::abs(t.weight) * corner_bias(t.family);
        e.truncation_note = "corner cell (1-c,1)^2 with c = " + format_bound(kCornerCell) +
                            " excluded (infinite second moment); bias <= " + format_bound(bias);
    }
    return e;
}

MCEstimate mc_cube_integral(CubeFamily family, unsigned dimension, std::uint64_t samples, std::uint64_t seed,
                            const RunOptions& options) {
    const WeightedFamily term{family, 1.0};
    return mc_cube_combination(std::span<const WeightedFamily>(&term, 1), dimension, samples, seed, options);
}

double cube_family_target(CubeFamily family, unsigned dimension, double zeta_d, double zeta_d_plus_1) {
    const double d = dimension;
    switch (family) {
        case CubeFamily::Direct:
            return zeta_d;
        case CubeFamily::Plus:
            return (1.0 - std::pow(2.0, 1.0 - d)) * zeta_d;
        case CubeFamily::Squared:
            return (1.0 - std::pow(2.0, -d)) * zeta_d;
        case CubeFamily::Log:
        case CubeFamily::LogSymmetric:
            return zeta_d_plus_1;
    }
    return 0.0;
}

}  // namespace zetavol::mc
