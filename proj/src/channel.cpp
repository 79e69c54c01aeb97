#include "gpc/channel.hpp"

#include <cctype>
#include <stdexcept>

namespace gpc {

std::string to_string(ClassTag tag) {
    switch (tag) {
        case ClassTag::p: return "p";
        case ClassTag::cp: return "cp";
        case ClassTag::g: return "g";
        case ClassTag::eb: return "eb";
    }
    return "?";
}

ClassTag parse_class_tag(const std::string& text) {
    std::string s;
    for (char ch : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (s == "p") return ClassTag::p;
    if (s == "cp") return ClassTag::cp;
    if (s == "g") return ClassTag::g;
    if (s == "eb") return ClassTag::eb;
    throw std::invalid_argument("unknown channel class '" + text + "' (expected p, cp, g or eb)");
}

void validate_dimensions(int d, int n_bases) {
    if (d < 2) throw std::invalid_argument("dimension d must be >= 2, got " + std::to_string(d));
    if (n_bases < 3 || n_bases > d + 1)
        throw std::invalid_argument("number of bases N must satisfy 3 <= N <= d+1, got d=" + std::to_string(d) +
                                    ", N=" + std::to_string(n_bases));
}

ChannelSpec ChannelSpec::make(int d, int n_bases, std::vector<Rational> lambdas) {
    validate_dimensions(d, n_bases);
    if (lambdas.size() != static_cast<size_t>(n_bases + 1))
        throw std::invalid_argument("expected " + std::to_string(n_bases + 1) + " eigenvalues, got " +
                                    std::to_string(lambdas.size()));
    if (n_bases == d + 1 && lambdas.back() != 0)
        throw std::invalid_argument("lambda_{N+1} must be 0 when N = d+1");
    return ChannelSpec{d, n_bases, std::move(lambdas)};
}

ChannelSpec eigenvalues_from_probabilities(const ProbabilityVector& p, int d, int n_bases) {
    validate_dimensions(d, n_bases);
    const auto& pr = p.probs;
    if (pr.size() != static_cast<size_t>(n_bases + 2))
        throw std::invalid_argument("expected " + std::to_string(n_bases + 2) + " probabilities (p_0..p_{N+1})");
    Rational total = 0;
    for (const auto& x : pr) total += x;
    if (total != 1) throw std::invalid_argument("probabilities sum to " + to_fraction_string(total) + ", not 1");
    const Rational& identity_weight = pr.back();
    if (n_bases == d + 1 && identity_weight != 0)
        throw std::invalid_argument("p_{N+1} must be 0 when N = d+1");
    std::vector<Rational> lambdas;
    lambdas.reserve(static_cast<size_t>(n_bases + 1));
    for (int a = 1; a <= n_bases; ++a) lambdas.emplace_back(identity_weight + pr[static_cast<size_t>(a)]);
    lambdas.push_back(identity_weight);
    return ChannelSpec::make(d, n_bases, std::move(lambdas));
}

ProbabilityVector probabilities_from_eigenvalues(const ChannelSpec& c) {
    const Rational& last = c.lambdas.back();
    ProbabilityVector p;
    p.probs.resize(static_cast<size_t>(c.n_bases + 2));
    Rational p0 = 1 - last;
    for (int a = 1; a <= c.n_bases; ++a) {
        Rational pa = c.lambdas[static_cast<size_t>(a - 1)] - last;
        p0 -= pa;
        p.probs[static_cast<size_t>(a)] = pa;
    }
    p.probs[0] = p0;
    p.probs.back() = last;
    return p;
}

bool is_cp(const ChannelSpec& c) {
    return criteria::completely_positive<Rational>(c.d, c.n_bases, c.lambdas);
}

bool is_positive_necessary(const ChannelSpec& c) {
    return criteria::positive_necessary<Rational>(c.d, c.n_bases, c.lambdas);
}

bool is_generator_achievable(const ChannelSpec& c) {
    return criteria::generator_achievable<Rational>(c.d, c.n_bases, c.lambdas);
}

EbVerdict is_eb_necessary(const ChannelSpec& c) {
    EbVerdict v;
    v.holds = criteria::eb_necessary<Rational>(c.d, c.n_bases, c.lambdas);
    v.known_sufficient = (c.n_bases == c.d || c.n_bases == c.d + 1) && is_generator_achievable(c);
    return v;
}

Rational min_output_overlap(const ChannelSpec& c) {
    const Rational hi = criteria::max_free<Rational>(c.d, c.n_bases, c.lambdas);
    const Rational lo = criteria::min_free<Rational>(c.d, c.n_bases, c.lambdas);
    Rational neg_hi = -hi;
    Rational scaled_lo = (c.d - 1) * lo;
    Rational inner = 1 + (neg_hi < scaled_lo ? neg_hi : scaled_lo);
    return inner / c.d;
}

namespace {

void check_operands(const ChannelSpec& c, const MubSet& m) {
    if (m.d != c.d)
        throw std::invalid_argument("MUB dimension " + std::to_string(m.d) + " does not match channel dimension " +
                                    std::to_string(c.d));
    if (m.count() < c.n_bases)
        throw std::invalid_argument("channel needs " + std::to_string(c.n_bases) + " bases, MUB set has " +
                                    std::to_string(m.count()));
}

}  // namespace

CMatrix apply(const ChannelSpec& c, const MubSet& m, const CMatrix& rho) {
    check_operands(c, m);
    if (rho.rows() != c.d || rho.cols() != c.d)
        throw std::invalid_argument("input matrix must be " + std::to_string(c.d) + "x" + std::to_string(c.d));
    const ProbabilityVector p = probabilities_from_eigenvalues(c);
    const auto d = static_cast<Eigen::Index>(c.d);

    CMatrix out = to_double(p.probs.back()) * rho;
    out += (to_double(p.probs[0]) * rho.trace() / static_cast<double>(c.d)) * CMatrix::Identity(d, d);
    for (int a = 0; a < c.n_bases; ++a) {
        const double pa = to_double(p.probs[static_cast<size_t>(a + 1)]);
        if (pa == 0.0) continue;
        const CMatrix& basis = m.bases[static_cast<size_t>(a)];
        // sum_k P_k rho P_k = sum_k <k|rho|k> |k><k|
        const CMatrix in_basis = basis.adjoint() * rho * basis;
        out += pa * basis * in_basis.diagonal().asDiagonal() * basis.adjoint();
    }
    return out;
}

CMatrix choi_state(const ChannelSpec& c, const MubSet& m) {
    check_operands(c, m);
    const auto d = static_cast<Eigen::Index>(c.d);
    CMatrix choi = CMatrix::Zero(d * d, d * d);
    for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l) {
            CMatrix e = CMatrix::Zero(d, d);
            e(k, l) = 1.0;
            choi.block(k * d, l * d, d, d) = apply(c, m, e) / static_cast<double>(c.d);
        }
    return choi;
}

}  // namespace gpc
