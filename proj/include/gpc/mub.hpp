#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace gpc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// A set of mutually unbiased bases in C^d. bases[a] holds the d vectors of
// basis a as the columns of a d x d matrix.
struct MubSet {
    int d = 0;
    std::vector<CMatrix> bases;

    int count() const { return static_cast<int>(bases.size()); }
    // Rank-1 projector onto vector k of basis `alpha` (0-based).
    CMatrix projector(int alpha, int k) const;
};

// Unitary operator basis { I, U_alpha^k, A_{beta,k} } attached to the first
// `n_bases` bases of a MubSet. Indices are 0-based: u[alpha][k] for
// alpha < n_bases, k < d (k = 0 is the identity), and a[beta][k] for the
// d + 1 - n_bases complementary bases, k = 1..d-1 (a[beta][0] is unused and
// left as the identity).
struct UnitaryFamily {
    int d = 0;
    int n_bases = 0;
    std::vector<std::vector<CMatrix>> u;
    std::vector<std::vector<CMatrix>> a;

    // Every distinct element of the orthogonal basis, identity first.
    std::vector<CMatrix> elements() const;
};

struct UnbiasedReport {
    double max_deviation = 0.0;       // max | |<psi|phi>|^2 - 1/d | across bases
    double max_orthonormal_error = 0.0;  // max | <psi_j|psi_k> - delta_jk | within bases
    // pair_deviation[a][b] for a < b, zero on and below the diagonal.
    std::vector<std::vector<double>> pair_deviation;
    bool pass = false;
};

bool is_prime(int n);

// Full set of d + 1 MUBs from the Weyl-Heisenberg construction: the
// eigenbases of Z, XZ, XZ^2, ..., XZ^{d-1}, X in that order. Vector j of each
// basis carries eigenvalue omega^j of its generator (for d = 2 the XZ basis is
// the sigma_y eigenbasis). Throws std::domain_error unless d is prime.
MubSet build_weyl_mubs(int d);

// Keeps the first n_bases bases of `m` as the channel's bases and completes
// the operator basis with the Weyl operators of the remaining ones.
UnitaryFamily unitaries_from_bases(const MubSet& m, int n_bases);
inline UnitaryFamily unitaries_from_bases(const MubSet& m) { return unitaries_from_bases(m, m.count()); }

UnbiasedReport verify_unbiased(const MubSet& m, double tol);

}  // namespace gpc
