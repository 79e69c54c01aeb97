#include "gpc/regions.hpp"
#include "gpc/volume.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace gpc;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

AffineExpr c(long n, long d = 1) { return AffineExpr::value(q(n, d)); }
AffineExpr x(int i) { return AffineExpr::var(i); }

bool same_bounds(const BoundChain& chain, const std::vector<Bound>& expected) {
    if (chain.bounds.size() != expected.size()) return false;
    for (size_t i = 0; i < expected.size(); ++i)
        if (!(chain.bounds[i].lower == expected[i].lower) || !(chain.bounds[i].upper == expected[i].upper)) return false;
    return true;
}

std::vector<ChamberSet> all_sets(int d_max) {
    std::vector<ChamberSet> sets;
    for (int d = 2; d <= d_max; ++d)
        for (int n : std::set<int>{d + 1, d, 3}) {
            if (n < 3 || !supported(d, n)) continue;
            for (auto t : {ClassTag::p, ClassTag::cp, ClassTag::g, ClassTag::eb}) sets.push_back(chambers_for(d, n, t));
        }
    return sets;
}

// Distance of a point to the faces of the exact predicate for `tag`.
double predicate_margin(ClassTag tag, int d, int n, std::span<const double> l) {
    const auto free = static_cast<size_t>(free_coordinates(d, n));
    double m = std::numeric_limits<double>::infinity();
    if (tag == ClassTag::p) {
        for (size_t i = 0; i < free; ++i) m = std::min({m, std::abs(l[i] + 1.0 / (d - 1)), std::abs(1 - l[i])});
        return m;
    }
    const auto [lo, hi] = criteria::cp_slack<double>(d, n, l);
    m = std::min(std::abs(lo), std::abs(hi));
    if (tag == ClassTag::g || tag == ClassTag::eb)
        for (size_t i = 0; i < free; ++i) m = std::min(m, std::abs(l[i]));
    if (tag == ClassTag::eb) m = std::min(m, std::abs(1 - criteria::weighted_sum<double>(d, n, l)));
    // Ties between eigenvalues are where the sorted chambers meet.
    for (size_t i = 0; i < free; ++i)
        for (size_t j = i + 1; j < free; ++j) m = std::min(m, std::abs(l[i] - l[j]));
    return m;
}

}  // namespace

TEST_CASE("every chain is well formed") {
    for (const auto& set : all_sets(7))
        for (const auto& chain : set.chains) {
            CAPTURE(chain.label);
            CHECK(chain.well_formed());
            for (size_t i = 0; i < chain.bounds.size(); ++i) {
                CHECK(chain.bounds[i].lower.last_referenced() < static_cast<int>(i));
                CHECK(chain.bounds[i].upper.last_referenced() < static_cast<int>(i));
            }
        }
}

TEST_CASE("positivity box") {
    const auto box = p_box(2, 3);
    REQUIRE(box.chains.size() == 1);
    CHECK(box.symmetry_factor == 1);
    CHECK(same_bounds(box.chains[0], {{c(-1), c(1)}, {c(-1), c(1)}, {c(-1), c(1)}}));
    CHECK(integrate_chain(box.chains[0]) == 8);
    CHECK(p_box(4, 3).chains[0].var_count == 4);
    CHECK(p_box(4, 5).chains[0].var_count == 5);
}

TEST_CASE("CP chain count is d+1 with (d+1)! symmetry") {
    long fact = 2;
    for (int d = 2; d <= 6; ++d) {
        fact *= d + 1;
        const auto set = cp_chambers_maxN(d);
        CHECK(set.chains.size() == static_cast<size_t>(d + 1));
        CHECK(set.symmetry_factor == fact);
        CHECK(set.ordering == Ordering::sorted);
    }
}

TEST_CASE("d=2 CP chains are the three qubit systems") {
    const auto set = cp_chambers_maxN(2);
    REQUIRE(set.chains.size() == 3);
    const AffineExpr half_up = (c(1) + x(0)) * q(1, 2);
    const AffineExpr top = c(1) + x(0) - x(1);
    CHECK(same_bounds(set.chains[0], {{c(-1), c(-1, 3)}, {x(0), c(0) - half_up}, {c(-1) - x(0) - x(1), top}}));
    CHECK(same_bounds(set.chains[1], {{c(-1), c(-1, 3)}, {c(0) - half_up, half_up}, {x(1), top}}));
    CHECK(same_bounds(set.chains[2], {{c(-1, 3), c(1)}, {x(0), half_up}, {x(1), top}}));

    Rational sum = 0;
    for (const auto& ch : set.chains) sum += integrate_chain(ch);
    CHECK(sum == q(4, 9));
}

TEST_CASE("d=2 generator chain") {
    const auto set = g_chambers_maxN(2);
    REQUIRE(set.chains.size() == 1);
    CHECK(same_bounds(set.chains[0], {{c(0), c(1)}, {x(0), (c(1) + x(0)) * q(1, 2)}, {x(1), c(1) + x(0) - x(1)}}));
}

TEST_CASE("N=3 chain counts") {
    for (int d = 3; d <= 7; ++d) {
        const auto cp = chambers_n3(d, ClassTag::cp);
        CHECK(cp.chains.size() == 16);
        CHECK(cp.symmetry_factor == 6);
        CHECK(chambers_n3(d, ClassTag::g).chains.size() == 4);
        CHECK(chambers_n3(d, ClassTag::eb).chains.size() == 4);
        for (int p = 0; p < 4; ++p) {
            int count = 0;
            for (const auto& ch : cp.chains) count += ch.extra_slot == p;
            CHECK(count == 4);
        }
    }
    CHECK_THROWS_AS(chambers_n3(2, ClassTag::cp), std::invalid_argument);
    CHECK_THROWS_AS(chambers_n3(4, ClassTag::p), std::invalid_argument);
}

TEST_CASE("d=4 lambda_4 at the top: the largest eigenvalue bound is halved") {
    int seen = 0;
    for (const auto& ch : chambers_n3(4, ClassTag::g).chains) {
        if (ch.extra_slot != 3) continue;
        ++seen;
        CHECK(ch.bounds[3].upper * q(2) == c(1) + x(0) * q(3) - x(1) - x(2));
    }
    CHECK(seen == 1);
    // Below the top slot there is no scaling.
    for (const auto& ch : chambers_n3(4, ClassTag::g).chains)
        if (ch.extra_slot == 2) CHECK(ch.bounds[3].upper == c(1) + x(0) * q(3) - x(1) - x(2) * q(2));
}

TEST_CASE("d=3, N=3 chambers reproduce the N=4 volumes") {
    for (auto t : {ClassTag::cp, ClassTag::g, ClassTag::eb}) {
        const auto three = volume_of(chambers_n3(3, t), Execution::serial);
        ChamberSet four;
        if (t == ClassTag::cp) four = cp_chambers_maxN(3);
        if (t == ClassTag::g) four = g_chambers_maxN(3);
        if (t == ClassTag::eb) four = eb_chambers_maxN(3);
        CHECK(three.lambda_volume == volume_of(four, Execution::serial).lambda_volume);
    }
}

TEST_CASE("chamber union agrees with the predicates on random points") {
    std::mt19937_64 rng(41);
    for (const auto& set : all_sets(5)) {
        CAPTURE(set.d);
        CAPTURE(set.n_bases);
        CAPTURE(to_string(set.class_tag));
        const ChamberEvaluator eval(set);
        const int free = free_coordinates(set.d, set.n_bases);
        std::uniform_real_distribution<double> u(-1.0 / (set.d - 1), 1.0);
        std::vector<double> full(static_cast<size_t>(set.n_bases + 1), 0.0);
        int disagreements = 0, overlaps = 0, used = 0;
        const int samples = set.d <= 3 ? 100000 : 20000;
        for (int s = 0; s < samples; ++s) {
            for (int i = 0; i < free; ++i) full[static_cast<size_t>(i)] = u(rng);
            const std::span<const double> pt(full.data(), static_cast<size_t>(free));
            const auto hit = eval.locate(pt);
            if (hit.min_abs_slack < 1e-9 || predicate_margin(set.class_tag, set.d, set.n_bases, full) < 1e-9) continue;
            ++used;
            const bool in = criteria::in_class<double>(set.class_tag, set.d, set.n_bases, full);
            disagreements += (hit.chains > 0) != in;
            overlaps += hit.chains > 1;
        }
        CHECK(used > samples / 2);
        CHECK(disagreements == 0);
        CHECK(overlaps == 0);
    }
}

TEST_CASE("unsupported (d, N)") {
    CHECK_FALSE(supported(6, 4));
    CHECK(supported(6, 3));
    CHECK(supported(6, 6));
    CHECK(supported(6, 7));
    CHECK_THROWS_AS(chambers_for(6, 4, ClassTag::cp), std::invalid_argument);
}

TEST_CASE("affine expressions") {
    const AffineExpr e = c(1, 2) + x(2) * q(3) - x(0);
    CHECK(e.last_referenced() == 2);
    CHECK((e - x(2) * q(3)).last_referenced() == 0);
    const std::vector<Rational> p{q(1), q(5), q(2)};
    CHECK(e.evaluate(p) == q(1, 2) + 6 - 1);
    const std::vector<double> pd{1.0, 5.0, 2.0};
    CHECK(e.evaluate(pd) == doctest::Approx(5.5));
}
