#pragma once

#include "gpc/mub.hpp"
#include "gpc/rational.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace gpc {

enum class ClassTag { p, cp, g, eb };

std::string to_string(ClassTag tag);
// Accepts "p", "cp", "g", "eb" (case-insensitive).
ClassTag parse_class_tag(const std::string& text);

// Throws std::invalid_argument unless 3 <= n_bases <= d + 1 and d >= 2.
void validate_dimensions(int d, int n_bases);

// Number of independent eigenvalue coordinates: N + 1 for N <= d, and d + 1
// for N = d + 1 (lambda_{N+1} is pinned to zero there).
inline int free_coordinates(int d, int n_bases) { return n_bases == d + 1 ? n_bases : n_bases + 1; }

// Generalized Pauli map in eigenvalue coordinates. lambdas holds
// (lambda_1, ..., lambda_N, lambda_{N+1}); the last entry is zero when N = d+1.
struct ChannelSpec {
    int d = 0;
    int n_bases = 0;
    std::vector<Rational> lambdas;

    // Validates (d, N) and the length/pinning invariants.
    static ChannelSpec make(int d, int n_bases, std::vector<Rational> lambdas);

    std::span<const Rational> free_lambdas() const {
        return {lambdas.data(), static_cast<size_t>(free_coordinates(d, n_bases))};
    }
};

// (p_0, p_1, ..., p_N, p_{N+1}); sums to one.
struct ProbabilityVector {
    std::vector<Rational> probs;
};

ChannelSpec eigenvalues_from_probabilities(const ProbabilityVector& p, int d, int n_bases);
ProbabilityVector probabilities_from_eigenvalues(const ChannelSpec& c);

// Eigenvalue-space membership tests. They are templates over the scalar so the
// exact predicates below and the binary64 Monte Carlo sampler share a single
// definition. `lambdas` always has N + 1 entries.
namespace criteria {

template <class T>
T weighted_sum(int d, int n_bases, std::span<const T> lambdas) {
    T s = 0;
    for (int a = 0; a < n_bases; ++a) s += lambdas[static_cast<size_t>(a)];
    if (n_bases < d + 1) s += T(d + 1 - n_bases) * lambdas[static_cast<size_t>(n_bases)];
    return s;
}

template <class T>
T min_free(int d, int n_bases, std::span<const T> lambdas) {
    const auto n = static_cast<size_t>(free_coordinates(d, n_bases));
    T m = lambdas[0];
    for (size_t i = 1; i < n; ++i)
        if (lambdas[i] < m) m = lambdas[i];
    return m;
}

template <class T>
T max_free(int d, int n_bases, std::span<const T> lambdas) {
    const auto n = static_cast<size_t>(free_coordinates(d, n_bases));
    T m = lambdas[0];
    for (size_t i = 1; i < n; ++i)
        if (lambdas[i] > m) m = lambdas[i];
    return m;
}

// Generalized Fujiwara-Algoet condition:
//   -1/(d-1) <= sum_b lambda_b + (d+1-N) lambda_{N+1} <= 1 + d min lambda.
template <class T>
bool completely_positive(int d, int n_bases, std::span<const T> lambdas) {
    const T w = weighted_sum(d, n_bases, lambdas);
    const T lower = T(-1) / T(d - 1);
    const T upper = T(1) + T(d) * min_free(d, n_bases, lambdas);
    return lower <= w && w <= upper;
}

// Signed distances to the two CP hyperplanes: (W + 1/(d-1), 1 + d min - W).
template <class T>
std::pair<T, T> cp_slack(int d, int n_bases, std::span<const T> lambdas) {
    const T w = weighted_sum(d, n_bases, lambdas);
    T lo = w + T(1) / T(d - 1);
    T hi = T(1) + T(d) * min_free(d, n_bases, lambdas) - w;
    return {lo, hi};
}

// Necessary positivity box: -1/(d-1) <= lambda <= 1 on every coordinate.
template <class T>
bool positive_necessary(int d, int n_bases, std::span<const T> lambdas) {
    const T lower = T(-1) / T(d - 1);
    const auto n = static_cast<size_t>(free_coordinates(d, n_bases));
    for (size_t i = 0; i < n; ++i)
        if (lambdas[i] < lower || lambdas[i] > T(1)) return false;
    return true;
}

template <class T>
bool generator_achievable(int d, int n_bases, std::span<const T> lambdas) {
    const auto n = static_cast<size_t>(free_coordinates(d, n_bases));
    for (size_t i = 0; i < n; ++i)
        if (lambdas[i] < T(0)) return false;
    return true;
}

template <class T>
bool eb_necessary(int d, int n_bases, std::span<const T> lambdas) {
    return weighted_sum(d, n_bases, lambdas) <= T(1);
}

// Membership in the regions whose volumes are computed: P is the necessary
// box, G = CP and lambda >= 0, EB = G and the entanglement-breaking bound.
template <class T>
bool in_class(ClassTag tag, int d, int n_bases, std::span<const T> lambdas) {
    switch (tag) {
        case ClassTag::p:
            return positive_necessary(d, n_bases, lambdas);
        case ClassTag::cp:
            return completely_positive(d, n_bases, lambdas);
        case ClassTag::g:
            return generator_achievable(d, n_bases, lambdas) && completely_positive(d, n_bases, lambdas);
        case ClassTag::eb:
            return generator_achievable(d, n_bases, lambdas) && eb_necessary(d, n_bases, lambdas) &&
                   completely_positive(d, n_bases, lambdas);
    }
    return false;
}

}  // namespace criteria

bool is_cp(const ChannelSpec& c);
bool is_positive_necessary(const ChannelSpec& c);
bool is_generator_achievable(const ChannelSpec& c);

struct EbVerdict {
    bool holds = false;
    // True when the bound is also sufficient: N in {d, d+1} and all lambda >= 0.
    bool known_sufficient = false;
};
EbVerdict is_eb_necessary(const ChannelSpec& c);

// min over the MUB projector families of Tr(Lambda[Q] P):
// (1/d) [1 + min{-lambda_max, (d-1) lambda_min}] over the free eigenvalues.
Rational min_output_overlap(const ChannelSpec& c);

// Lambda[rho] = p_{N+1} rho + p_0 I Tr(rho)/d + sum_a p_a sum_k P_k^(a) rho P_k^(a)
// using the first N bases of `m`. Linear, so rho need not be a state.
CMatrix apply(const ChannelSpec& c, const MubSet& m, const CMatrix& rho);

// (1/d) sum_{kl} |k><l| (x) Lambda[|k><l|], a d^2 x d^2 matrix.
CMatrix choi_state(const ChannelSpec& c, const MubSet& m);

}  // namespace gpc
