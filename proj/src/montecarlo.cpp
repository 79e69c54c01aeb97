#include "gpc/montecarlo.hpp"

#include "gpc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace gpc {

bool McEstimate::consistent_with(double exact, double sigmas) const {
    return std::abs(estimate - exact) <= sigmas * std_error + 1e-12 * std::abs(exact);
}

namespace {

struct Sampler {
    int d;
    int n_bases;
    ClassTag tag;
    int coords;
    double lo;
    double width;

    Sampler(int d_, int n_, ClassTag t)
        : d(d_), n_bases(n_), tag(t), coords(free_coordinates(d_, n_)), lo(-1.0 / (d_ - 1)), width(1.0 - lo) {}

    std::uint64_t count_block(std::uint64_t seed, std::uint64_t block, std::uint64_t total) const {
        const std::uint64_t begin = block * kMcBlock;
        const std::uint64_t end = std::min(total, begin + kMcBlock);
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        std::mt19937_64 engine(seq);
        std::vector<double> lambdas(static_cast<size_t>(n_bases + 1), 0.0);
        const std::span<const double> view(lambdas);
        std::uint64_t hits = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            for (int k = 0; k < coords; ++k) {
                const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
                lambdas[static_cast<size_t>(k)] = lo + width * u;
            }
            if (criteria::in_class<double>(tag, d, n_bases, view)) ++hits;
        }
        return hits;
    }
};

McEstimate finish(int d, int n_bases, ClassTag tag, std::uint64_t samples, std::uint64_t seed, std::uint64_t hits) {
    McEstimate e{d, n_bases, tag, samples, seed, hits, 0.0, 0.0};
    const double box = vp_volume(d, n_bases).to_double();
    const double f = e.hit_fraction();
    e.estimate = f * box;
    e.std_error = box * std::sqrt(f * (1.0 - f) / static_cast<double>(samples));
    return e;
}

void check_args(int d, int n_bases, std::uint64_t samples) {
    validate_dimensions(d, n_bases);
    if (samples < 10000) throw std::invalid_argument("mc_volume: need at least 10^4 samples");
}

std::uint64_t block_count(std::uint64_t samples) { return (samples + kMcBlock - 1) / kMcBlock; }

}  // namespace

McEstimate mc_volume(int d, int n_bases, ClassTag tag, std::uint64_t samples, std::uint64_t seed) {
    check_args(d, n_bases, samples);
    const Sampler sampler(d, n_bases, tag);
    const auto blocks = static_cast<long long>(block_count(samples));
    std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
    for (long long b = 0; b < blocks; ++b) hits += sampler.count_block(seed, static_cast<std::uint64_t>(b), samples);
    return finish(d, n_bases, tag, samples, seed, hits);
}

McEstimate mc_volume_serial(int d, int n_bases, ClassTag tag, std::uint64_t samples, std::uint64_t seed) {
    check_args(d, n_bases, samples);
    const Sampler sampler(d, n_bases, tag);
    std::uint64_t hits = 0;
    for (std::uint64_t b = 0; b < block_count(samples); ++b) hits += sampler.count_block(seed, b, samples);
    return finish(d, n_bases, tag, samples, seed, hits);
}

}  // namespace gpc
