#pragma once

#include "gpc/rational.hpp"

#include <string>
#include <vector>

namespace gpc {

// Exact number coeff * sqrt(radicand) with a square-free radicand. Zero is
// stored as 0 * sqrt(1), so radicand == 1 exactly when the value is rational.
class SurdValue {
public:
    SurdValue() = default;
    SurdValue(Rational coeff, Integer radicand = 1);

    // sqrt(q) for a non-negative rational q.
    static SurdValue sqrt_of(const Rational& q);

    const Rational& coeff() const { return coeff_; }
    const Integer& radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }
    // coeff^2 * radicand, signed by coeff.
    Rational signed_square() const;
    double to_double() const;
    std::string to_decimal(int digits = 20) const;

    friend SurdValue operator*(const SurdValue& a, const SurdValue& b);
    // Throws std::domain_error on division by zero.
    friend SurdValue operator/(const SurdValue& a, const SurdValue& b);
    friend bool operator==(const SurdValue& a, const SurdValue& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
    }

private:
    void canonicalize();

    Rational coeff_ = 0;
    Integer radicand_ = 1;
};

SurdValue pow(const SurdValue& base, unsigned exponent);

// Diagonal Hilbert-Schmidt metric in eigenvalue coordinates. For N <= d there
// are N + 1 entries ((d-1)/d^2 times (1, ..., 1, d+1-N)); for N = d + 1 the
// lambda_{N+1} direction vanishes and the d + 1 entries are all (d-1)/d^2.
struct MetricData {
    int d = 0;
    int n_bases = 0;
    std::vector<Rational> diag;

    Rational determinant() const;
};

MetricData metric(int d, int n_bases);

// sqrt(det g): sqrt(d+1-N) (sqrt(d-1)/d)^{N+1}, or (sqrt(d-1)/d)^{d+1} for N = d+1.
SurdValue volume_prefactor(int d, int n_bases);

// Closed-form volume of the necessary positivity box, including the prefactor.
SurdValue vp_volume(int d, int n_bases);

}  // namespace gpc
