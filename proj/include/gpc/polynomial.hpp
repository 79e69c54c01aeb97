#pragma once

#include "gpc/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace gpc {

// Multivariate polynomial in a fixed number of variables with exact rational
// coefficients. Zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(int variables = 0) : vars_(variables) {}

    static MultiPoly constant(int variables, const Rational& c);
    static MultiPoly variable(int variables, int index);
    // c0 + sum_i coeffs[i] x_i; coeffs may be shorter than `variables`.
    static MultiPoly linear(int variables, const Rational& c0, std::span<const Rational> coeffs);

    int variables() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;
    // Highest power of x_index that appears.
    unsigned degree_in(int index) const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const Rational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    // Antiderivative in x_index with zero integration constant.
    MultiPoly antiderivative(int index) const;
    // Replaces x_index by `value`, which must not itself depend on x_index.
    MultiPoly substitute(int index, const MultiPoly& value) const;
    Rational evaluate(std::span<const Rational> point) const;
    // Value of the constant term (zero when absent).
    Rational constant_term() const;

private:
    int vars_;
    std::map<Exponents, Rational> terms_;
};

}  // namespace gpc
