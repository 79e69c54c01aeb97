#include "gpc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gpc {

MultiPoly MultiPoly::constant(int variables, const Rational& c) {
    MultiPoly p(variables);
    p.add_term(Exponents(static_cast<size_t>(variables), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int variables, int index) {
    if (index < 0 || index >= variables) throw std::out_of_range("MultiPoly::variable: index out of range");
    MultiPoly p(variables);
    Exponents e(static_cast<size_t>(variables), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::linear(int variables, const Rational& c0, std::span<const Rational> coeffs) {
    if (coeffs.size() > static_cast<size_t>(variables))
        throw std::invalid_argument("MultiPoly::linear: more coefficients than variables");
    MultiPoly p = constant(variables, c0);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(static_cast<size_t>(variables), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

unsigned MultiPoly::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        deg = std::max(deg, s);
    }
    return deg;
}

unsigned MultiPoly::degree_in(int index) const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<size_t>(index)]);
    return deg;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != static_cast<size_t>(vars_)) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    if (other.vars_ != vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    MultiPoly out(a.vars_);
    MultiPoly::Exponents e(static_cast<size_t>(a.vars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::antiderivative(int index) const {
    const auto i = static_cast<size_t>(index);
    MultiPoly out(vars_);
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        ++e[i];
        out.add_term(e, c / Rational(e[i]));
    }
    return out;
}

MultiPoly MultiPoly::substitute(int index, const MultiPoly& value) const {
    const auto i = static_cast<size_t>(index);
    if (value.vars_ != vars_) throw std::invalid_argument("MultiPoly::substitute: variable count mismatch");
    if (value.degree_in(index) != 0) throw std::invalid_argument("MultiPoly::substitute: value depends on the variable");

    // Group by the power of x_index: this = sum_j C_j x^j.
    std::vector<MultiPoly> by_power(degree_in(index) + 1, MultiPoly(vars_));
    for (const auto& [key, c] : terms_) {
        Exponents e = key;
        const unsigned j = e[i];
        e[i] = 0;
        by_power[j].add_term(e, c);
    }
    MultiPoly out(vars_);
    MultiPoly power = constant(vars_, Rational(1));
    for (size_t j = 0; j < by_power.size(); ++j) {
        if (j > 0) power = power * value;
        if (!by_power[j].is_zero()) out += by_power[j] * power;
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != static_cast<size_t>(vars_)) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t k = 0; k < e.size(); ++k)
            for (unsigned r = 0; r < e[k]; ++r) t *= point[k];
        total += t;
    }
    return total;
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Exponents(static_cast<size_t>(vars_), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

}  // namespace gpc
