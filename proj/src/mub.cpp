#include "gpc/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gpc {

namespace {

Complex omega_pow(int d, long long power) {
    const long long r = ((power % d) + d) % d;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d;
    return {std::cos(angle), std::sin(angle)};
}

// Eigenbasis of X Z^a (a = 0 gives X) for odd prime d: component m of vector j
// is omega^{a m(m-1)/2 - j m} / sqrt(d), eigenvalue omega^j.
CMatrix shift_clock_basis(int d, int a) {
    CMatrix basis(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j)
        for (int m = 0; m < d; ++m) {
            const long long phase = static_cast<long long>(a) * m * (m - 1) / 2 - static_cast<long long>(j) * m;
            basis(m, j) = omega_pow(d, phase) * norm;
        }
    return basis;
}

CMatrix qubit_basis(int which) {
    const double h = 1.0 / std::sqrt(2.0);
    CMatrix b(2, 2);
    switch (which) {
        case 0:  // Z
            b << 1.0, 0.0, 0.0, 1.0;
            break;
        case 1:  // XZ ~ sigma_y
            b << h, h, Complex(0, h), Complex(0, -h);
            break;
        default:  // X
            b << h, h, h, -h;
            break;
    }
    return b;
}

CMatrix weyl_from_basis(const CMatrix& basis, int k) {
    const int d = static_cast<int>(basis.rows());
    CMatrix u = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
        u += omega_pow(d, static_cast<long long>(j) * k) * basis.col(j) * basis.col(j).adjoint();
    return u;
}

}  // namespace

CMatrix MubSet::projector(int alpha, int k) const {
    const auto& v = bases.at(static_cast<size_t>(alpha)).col(k);
    return v * v.adjoint();
}

std::vector<CMatrix> UnitaryFamily::elements() const {
    std::vector<CMatrix> out;
    out.push_back(CMatrix::Identity(d, d));
    for (const auto& fam : u)
        for (int k = 1; k < d; ++k) out.push_back(fam[static_cast<size_t>(k)]);
    for (const auto& fam : a)
        for (int k = 1; k < d; ++k) out.push_back(fam[static_cast<size_t>(k)]);
    return out;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

MubSet build_weyl_mubs(int d) {
    if (d < 2 || !is_prime(d))
        throw std::domain_error("build_weyl_mubs: dimension must be a prime >= 2, got " + std::to_string(d));
    MubSet m;
    m.d = d;
    if (d == 2) {
        for (int b = 0; b < 3; ++b) m.bases.push_back(qubit_basis(b));
        return m;
    }
    m.bases.push_back(CMatrix::Identity(d, d));
    for (int a = 1; a < d; ++a) m.bases.push_back(shift_clock_basis(d, a));
    m.bases.push_back(shift_clock_basis(d, 0));
    return m;
}

UnitaryFamily unitaries_from_bases(const MubSet& m, int n_bases) {
    if (n_bases < 1 || n_bases > m.count())
        throw std::invalid_argument("unitaries_from_bases: basis count out of range");
    if (m.count() != m.d + 1 && n_bases != m.count())
        throw std::invalid_argument("unitaries_from_bases: completing the operator basis needs all d+1 MUBs");
    UnitaryFamily f;
    f.d = m.d;
    f.n_bases = n_bases;
    for (int alpha = 0; alpha < m.count(); ++alpha) {
        std::vector<CMatrix> ops;
        for (int k = 0; k < m.d; ++k) ops.push_back(weyl_from_basis(m.bases[static_cast<size_t>(alpha)], k));
        (alpha < n_bases ? f.u : f.a).push_back(std::move(ops));
    }
    return f;
}

UnbiasedReport verify_unbiased(const MubSet& m, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("verify_unbiased: tolerance must be positive");
    UnbiasedReport r;
    const auto n = static_cast<size_t>(m.count());
    r.pair_deviation.assign(n, std::vector<double>(n, 0.0));
    const double target = 1.0 / m.d;
    for (size_t a = 0; a < n; ++a) {
        const CMatrix gram = m.bases[a].adjoint() * m.bases[a];
        const double err = (gram - CMatrix::Identity(m.d, m.d)).cwiseAbs().maxCoeff();
        r.max_orthonormal_error = std::max(r.max_orthonormal_error, err);
        for (size_t b = a + 1; b < n; ++b) {
            const CMatrix overlap = m.bases[a].adjoint() * m.bases[b];
            double dev = 0.0;
            for (Eigen::Index i = 0; i < overlap.size(); ++i)
                dev = std::max(dev, std::abs(std::norm(overlap(i)) - target));
            r.pair_deviation[a][b] = dev;
            r.max_deviation = std::max(r.max_deviation, dev);
        }
    }
    r.pass = r.max_deviation < tol && r.max_orthonormal_error < tol;
    return r;
}

}  // namespace gpc
