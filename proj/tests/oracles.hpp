#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include "gpc/channel.hpp"
#include "gpc/mub.hpp"
#include "gpc/rational.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace gpc::testing {

// Smallest eigenvalue of the Choi state; negative means not CP.
inline double min_choi_eigenvalue(const ChannelSpec& c, const MubSet& m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(choi_state(c, m), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

// min over all MUB projectors P, Q (all d+1 bases) of Tr(Lambda[Q] P).
inline double brute_force_min_overlap(const ChannelSpec& c, const MubSet& all_bases) {
    double best = std::numeric_limits<double>::infinity();
    for (int a = 0; a < all_bases.count(); ++a)
        for (int k = 0; k < c.d; ++k) {
            const CMatrix out = apply(c, all_bases, all_bases.projector(a, k));
            for (int b = 0; b < all_bases.count(); ++b)
                for (int l = 0; l < c.d; ++l)
                    best = std::min(best, (out * all_bases.projector(b, l)).trace().real());
        }
    return best;
}

// Uniform rational on the grid {lo + (hi - lo) j / steps}.
inline Rational grid_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi, long steps) {
    std::uniform_int_distribution<long> pick(0, steps);
    Rational q = lo + (hi - lo) * Rational(pick(rng), steps);
    q.canonicalize();
    return q;
}

// Random eigenvalue vector in [lo, hi] on every free coordinate.
inline ChannelSpec random_channel(std::mt19937_64& rng, int d, int n_bases, const Rational& lo, const Rational& hi,
                                  long steps = 3600) {
    std::vector<Rational> lambdas(static_cast<size_t>(n_bases + 1), Rational(0));
    for (int i = 0; i < free_coordinates(d, n_bases); ++i) lambdas[static_cast<size_t>(i)] = grid_rational(rng, lo, hi, steps);
    return ChannelSpec::make(d, n_bases, std::move(lambdas));
}

inline ChannelSpec random_in_p_box(std::mt19937_64& rng, int d, int n_bases, long steps = 3600) {
    return random_channel(rng, d, n_bases, Rational(-1, d - 1), Rational(1), steps);
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int d) {
    std::normal_distribution<double> g;
    CMatrix a(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
    return (a + a.adjoint()) / 2.0;
}

}  // namespace gpc::testing
