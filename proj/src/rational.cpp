#include "gpc/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include <gmp.h>

namespace gpc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text) {
    const auto s = trim(text);
    const auto slash = s.find('/');
    const auto num_part = trim(s.substr(0, slash));
    const auto den_part = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    if (!is_integer_literal(num_part) || !is_integer_literal(den_part))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    Integer num = parse_integer(num_part);
    Integer den = parse_integer(den_part);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
    // 4 bits per decimal digit plus guard bits.
    mpf_class x(0, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    x = q;
    if (x == 0) return "0";
    mp_exp_t exp = 0;
    char* raw = mpf_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), x.get_mpf_t());
    std::string mantissa(raw);
    void (*free_fn)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &free_fn);
    free_fn(raw, std::char_traits<char>::length(raw) + 1);

    std::string sign;
    if (!mantissa.empty() && mantissa.front() == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    // mantissa is 0.<digits> * 10^exp
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<size_t>(-exp), '0') + mantissa;
    } else if (static_cast<size_t>(exp) >= mantissa.size()) {
        out = mantissa + std::string(static_cast<size_t>(exp) - mantissa.size(), '0');
    } else {
        out = mantissa.substr(0, static_cast<size_t>(exp)) + "." + mantissa.substr(static_cast<size_t>(exp));
    }
    return sign + out;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gpc
