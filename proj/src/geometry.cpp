#include "gpc/geometry.hpp"

#include "gpc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace gpc {

namespace {

// Splits n = s^2 * r with r square-free; returns {s, r}.
std::pair<Integer, Integer> split_square(Integer n) {
    Integer outside = 1;
    Integer inside = 1;
    for (Integer p = 2; p * p <= n; ++p) {
        unsigned count = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++count;
        }
        for (unsigned i = 0; i < count / 2; ++i) outside *= p;
        if (count % 2 == 1) inside *= p;
    }
    inside *= n;
    return {outside, inside};
}

}  // namespace

SurdValue::SurdValue(Rational coeff, Integer radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw std::domain_error("SurdValue: negative radicand");
    canonicalize();
}

void SurdValue::canonicalize() {
    coeff_.canonicalize();
    if (coeff_ == 0 || radicand_ == 0) {
        coeff_ = 0;
        radicand_ = 1;
        return;
    }
    auto [outside, inside] = split_square(radicand_);
    coeff_ *= outside;
    radicand_ = inside;
}

SurdValue SurdValue::sqrt_of(const Rational& q) {
    if (q < 0) throw std::domain_error("SurdValue::sqrt_of: negative argument");
    // sqrt(p/q) = sqrt(p q) / q
    const Integer& den = q.get_den();
    return SurdValue(Rational(1, 1) / Rational(den), q.get_num() * den);
}

Rational SurdValue::signed_square() const {
    Rational s = coeff_ * coeff_ * Rational(radicand_);
    return coeff_ < 0 ? Rational(-s) : s;
}

double SurdValue::to_double() const { return coeff_.get_d() * std::sqrt(radicand_.get_d()); }

std::string SurdValue::to_decimal(int digits) const {
    mpf_class r(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    r = radicand_;
    r = sqrt(r);
    mpf_class c(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    c = coeff_;
    mpf_class v(c * r, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    // Route through a rational so formatting is shared with exact values.
    Rational approx(v);
    return to_decimal_string(approx, digits);
}

SurdValue operator*(const SurdValue& a, const SurdValue& b) {
    return SurdValue(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
}

SurdValue operator/(const SurdValue& a, const SurdValue& b) {
    if (b.coeff_ == 0) throw std::domain_error("SurdValue: division by zero");
    // (a sqrt r) / (b sqrt s) = (a / (b s)) sqrt(r s)
    return SurdValue(a.coeff_ / (b.coeff_ * Rational(b.radicand_)), a.radicand_ * b.radicand_);
}

SurdValue pow(const SurdValue& base, unsigned exponent) {
    SurdValue out(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

Rational MetricData::determinant() const {
    Rational det = 1;
    for (const auto& g : diag) det *= g;
    return det;
}

MetricData metric(int d, int n_bases) {
    validate_dimensions(d, n_bases);
    MetricData m{d, n_bases, {}};
    Rational unit(d - 1, d * d);
    unit.canonicalize();
    m.diag.assign(static_cast<size_t>(free_coordinates(d, n_bases)), unit);
    if (n_bases <= d) m.diag.back() = unit * (d + 1 - n_bases);
    return m;
}

SurdValue volume_prefactor(int d, int n_bases) {
    return SurdValue::sqrt_of(metric(d, n_bases).determinant());
}

SurdValue vp_volume(int d, int n_bases) {
    validate_dimensions(d, n_bases);
    const Rational side_scale(d - 1);
    if (n_bases == d + 1) return SurdValue::sqrt_of(1 / rational_pow(side_scale, static_cast<unsigned>(d + 1)));
    return SurdValue::sqrt_of(Rational(d + 1 - n_bases) / rational_pow(side_scale, static_cast<unsigned>(n_bases + 1)));
}

}  // namespace gpc
