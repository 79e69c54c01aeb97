#include "gpc/montecarlo.hpp"
#include "gpc/volume.hpp"

#include <doctest.h>
#include <omp.h>

#include <cmath>

using namespace gpc;

namespace {

bool identical(const McEstimate& a, const McEstimate& b) {
    return a.hits == b.hits && a.samples == b.samples && a.estimate == b.estimate && a.std_error == b.std_error;
}

}  // namespace

TEST_CASE("same arguments, same estimate") {
    const auto a = mc_volume(3, 4, ClassTag::cp, 200000, 7);
    const auto b = mc_volume(3, 4, ClassTag::cp, 200000, 7);
    CHECK(identical(a, b));
    const auto c = mc_volume(3, 4, ClassTag::cp, 200000, 8);
    CHECK(a.hits != c.hits);
}

TEST_CASE("thread count does not change the result") {
    const int saved = omp_get_max_threads();
    for (auto t : {ClassTag::cp, ClassTag::eb}) {
        // A sample count that is not a multiple of the block size.
        const std::uint64_t n = 5 * kMcBlock + 1234;
        const auto ref = mc_volume_serial(4, 5, t, n, 99);
        for (int threads : {1, 2, 4}) {
            omp_set_num_threads(threads);
            CHECK(identical(mc_volume(4, 5, t, n, 99), ref));
        }
    }
    omp_set_num_threads(saved);
}

TEST_CASE("positivity box is always hit") {
    const auto r = mc_volume(3, 4, ClassTag::p, 100000, 1);
    CHECK(r.hit_fraction() == 1.0);
    CHECK(r.estimate == doctest::Approx(0.25));
    CHECK(r.std_error == 0.0);
}

TEST_CASE("qubit CP volume") {
    const auto r = mc_volume(2, 3, ClassTag::cp, 1000000, 42);
    CHECK(r.consistent_with(1.0 / 3.0));
    CHECK(r.hit_fraction() == doctest::Approx(1.0 / 3.0).epsilon(0.01));
    CHECK_FALSE(r.consistent_with(0.35));
}

TEST_CASE("estimates agree with the exact engine") {
    struct Case {
        int d, n;
        ClassTag t;
        std::uint64_t samples;
    };
    const std::vector<Case> cases{{4, 5, ClassTag::eb, 10000000}, {3, 4, ClassTag::g, 1000000},
                                  {4, 3, ClassTag::cp, 1000000}, {5, 3, ClassTag::g, 1000000}};
    for (const auto& c : cases) {
        CAPTURE(c.d);
        CAPTURE(c.n);
        const auto r = mc_volume(c.d, c.n, c.t, c.samples, 2024);
        const double exact = class_volume(c.d, c.n, c.t).hs_volume.to_double();
        CHECK(r.consistent_with(exact));
        CHECK(r.std_error > 0);
        CHECK(std::abs(r.estimate - exact) < 5 * r.std_error);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(mc_volume(3, 4, ClassTag::cp, 9999, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_volume_serial(3, 4, ClassTag::cp, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(mc_volume(2, 4, ClassTag::cp, 10000, 1), std::invalid_argument);
    CHECK_NOTHROW(mc_volume(3, 4, ClassTag::cp, 10000, 1));
}
