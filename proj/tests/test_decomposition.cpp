#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fricke/decomposition.hpp"
#include "fricke/hplane.hpp"

using namespace fricke;

namespace {

// Cusp-side oracle: arc length of the unit semicircle between the Euclidean
// angles alpha/2 and pi - alpha/2, by Simpson quadrature of d(theta)/sin(theta).
double bigon_side_by_quadrature(double alpha) {
    const double t0 = alpha / 2.0, t1 = kPi - alpha / 2.0;
    const int n = 20000;
    double sum = 0.0;
    auto f = [](double th) { return 1.0 / std::sin(th); };
    for (int i = 0; i < n; ++i) {
        const double a = t0 + (t1 - t0) * i / n;
        const double b = t0 + (t1 - t0) * (i + 1) / n;
        sum += (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
    }
    return sum;
}

}  // namespace

TEST_CASE("chart membership") {
    CHECK_NOTHROW(make_vpoint(0.6, 0.0));
    CHECK_THROWS_AS(make_vpoint(0.6, 1.0), OutsideV);
    CHECK_THROWS_AS(make_vpoint(0.5, 0.0), OutsideV);
    CHECK_THROWS_AS(make_vpoint(1.0, 0.0), OutsideV);
    CHECK_THROWS_AS(make_vpoint(0.6, std::log(1.5)), OutsideV);

    // Diagnostics name the violated inequality.
    try {
        make_vpoint(0.6, 1.0);
        FAIL("expected OutsideV");
    } catch (const OutsideV& e) {
        CHECK(std::string(e.what()).find("log(t/(1-t))") != std::string::npos);
    }
}

TEST_CASE("region classification") {
    CHECK(classify(make_vpoint(0.8, -1.0)) == Region::I);
    CHECK(classify(make_vpoint(0.8, -1.2)) == Region::II);
    CHECK(classify(make_vpoint(0.8, 0.5 * std::log(9.0))) == Region::III);
    CHECK(classify(make_vpoint(0.8, 0.5 * std::log(9.0) + 5e-10)) == Region::III);

    for (double t : {0.55, 0.65, 0.75, 0.85, 0.95}) {
        const double b = s_bound(t);
        for (int j = 1; j <= 9; ++j) {
            const VPoint v = make_vpoint(t, -b + 2.0 * b * j / 10.0);
            CHECK(classify(v) == classify(VPoint{v.t, -v.s}));
        }
    }
}

TEST_CASE("punctured bigon") {
    const double r2 = std::sqrt(2.0) / 2.0;
    const PuncturedBigon b1 = bigon_from_t(r2);
    CHECK(b1.alpha == doctest::Approx(kPi / 2).epsilon(1e-14));
    CHECK(b1.a == doctest::Approx(2.0 * std::log(std::sqrt(2.0) + 1.0))
                      .epsilon(1e-14));

    const double t0 = 3.0 * std::sqrt(5.0) / 10.0;
    const PuncturedBigon b2 = bigon_from_t(t0);
    CHECK(b2.a == doctest::Approx(std::log((29.0 + 12.0 * std::sqrt(5.0)) / 11.0))
                      .epsilon(1e-14));

    const PuncturedBigon b3 = bigon_from_t(0.6);
    CHECK(b3.alpha == doctest::Approx(2.0 * std::acos(0.6)).epsilon(1e-14));
    CHECK(b3.a == doctest::Approx(std::log(4.0)).epsilon(1e-14));

    CHECK_THROWS_AS(bigon_from_t(0.5), OutsideV);
    CHECK_THROWS_AS(bigon_from_t(1.2), OutsideV);

    // The two parametrizations agree, and both match the quadrature oracle.
    for (int i = 1; i <= 20; ++i) {
        const double t = 0.5 + 0.5 * i / 21.0;
        const PuncturedBigon b = bigon_from_t(t);
        const double via_alpha = std::log((1.0 + std::cos(b.alpha / 2.0)) /
                                          (1.0 - std::cos(b.alpha / 2.0)));
        CHECK(std::fabs(b.a - via_alpha) < 1e-12);
        CHECK(b.a == doctest::Approx(bigon_side_by_quadrature(b.alpha))
                         .epsilon(1e-9));
    }
}

TEST_CASE("clearances") {
    const double r2 = std::sqrt(2.0) / 2.0;
    CHECK(std::fabs(clearance_r(r2)) < 1e-12);
    CHECK(std::fabs(clearance_r_prime(r2)) < 1e-12);

    CHECK(clearance_r(0.6) == doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
    const double r055 = 0.5 * std::log(0.45) + 0.5 * std::log(1.55) -
                        std::log(0.55);
    CHECK(clearance_r(0.55) == doctest::Approx(r055).epsilon(1e-14));
    CHECK(r055 == doctest::Approx(0.4177106181).epsilon(1e-8));

    CHECK(clearance_r_prime(0.8) ==
          doctest::Approx(std::log(4.0 / 3.0)).epsilon(1e-14));
    CHECK(clearance_r_prime(0.9) ==
          doctest::Approx(std::log(0.9 / std::sqrt(0.19))).epsilon(1e-14));

    CHECK(clearance_r(0.9) == 0.0);
    CHECK(clearance_r_prime(0.6) == 0.0);

    // r' is the negation of r where both formulas apply.
    for (int i = 1; i <= 30; ++i) {
        const double t = 0.5 + 0.5 * i / 31.0;
        const double raw_r = 0.5 * std::log(1.0 - t) + 0.5 * std::log(1.0 + t) -
                             std::log(t);
        const double raw_rp = std::log(t) - 0.5 * std::log(1.0 - t) -
                              0.5 * std::log(1.0 + t);
        CHECK(std::fabs(raw_r + raw_rp) < 1e-12);
    }
}

TEST_CASE("region bounds from the chart inequalities") {
    for (double t : {0.52, 0.6, 0.7}) {
        const double bound = s_bound(t);
        for (int j = 1; j <= 15; ++j) {
            const VPoint v = make_vpoint(t, -bound + 2.0 * bound * j / 16.0);
            const double a = bigon_from_t(t).a;
            const double a1 = 0.5 * a + v.s, a2 = 0.5 * a - v.s;
            if (classify(v) != Region::I) continue;
            CHECK(a1 > 0.0);
            CHECK(a2 > 0.0);
            if (t < std::sqrt(2.0) / 2.0) {
                CHECK(a1 > clearance_r(t));
                CHECK(a2 > clearance_r(t));
            }
        }
    }
    for (double t : {0.75, 0.85, 0.95}) {
        const double bound = s_bound(t);
        const double a = bigon_from_t(t).a;
        for (int j = 1; j <= 15; ++j) {
            const VPoint v = make_vpoint(t, -bound + 2.0 * bound * j / 16.0);
            if (classify(v) != Region::II) continue;
            const double gap = std::fabs(v.s) - 0.5 * a;
            CHECK(gap > 0.0);
            CHECK(gap < clearance_r_prime(t));
        }
    }
}
