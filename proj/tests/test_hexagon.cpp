#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fricke/hexagon.hpp"
#include "fricke/lengths.hpp"

using namespace fricke;

namespace {

std::vector<double> side_lengths(const HexagonResult& h) {
    std::vector<double> out(6);
    for (int i = 0; i < 6; ++i)
        out[i] = dist(h.vertices[i], h.vertices[(i + 1) % 6]);
    return out;
}

}  // namespace

TEST_CASE("hexagon at the minimizing chart point") {
    const double t0 = 3.0 * std::sqrt(5.0) / 10.0;
    const HexagonResult h = build_hexagon(make_vpoint(t0, 0.0));
    const double a_expect = std::log((29.0 + 12.0 * std::sqrt(5.0)) / 11.0);
    const double c_expect = std::log((21.0 + 8.0 * std::sqrt(5.0)) / 11.0);
    CHECK(h.a == doctest::Approx(a_expect).epsilon(1e-12));
    CHECK(h.c == doctest::Approx(c_expect).epsilon(1e-10));
    CHECK(h.d == doctest::Approx(c_expect).epsilon(1e-10));
    CHECK(verify_hexagon(h).all_pass());
}

TEST_CASE("hexagon on the axis at t=0.8") {
    const HexagonResult h = build_hexagon(make_vpoint(0.8, 0.0));
    CHECK(h.a == doctest::Approx(std::log(9.0)).epsilon(1e-12));
    CHECK(h.c == doctest::Approx(c_closed_form(0.8).c).epsilon(1e-10));
    CHECK(h.d == doctest::Approx(h.c).epsilon(1e-10));
    CHECK(verify_hexagon(h).all_pass());
    CHECK(h.region == Region::I);
}

TEST_CASE("type II hexagon") {
    const HexagonResult h = build_hexagon(make_vpoint(0.8, -1.2));
    CHECK(h.region == Region::II);
    CHECK(verify_hexagon(h).all_pass());
    CHECK(h.area == doctest::Approx(2.0 * h.alpha).epsilon(1e-9));

    const auto sides = side_lengths(h);
    CHECK(sides[0] == doctest::Approx(h.a).epsilon(1e-12));
    CHECK(sides[1] == doctest::Approx(h.c).epsilon(1e-12));
    CHECK(sides[2] == doctest::Approx(h.d).epsilon(1e-12));
    CHECK(sides[3] == doctest::Approx(h.a).epsilon(1e-10));
    CHECK(sides[4] == doctest::Approx(h.c).epsilon(1e-10));
    CHECK(sides[5] == doctest::Approx(h.d).epsilon(1e-10));

    // The c side is split by the common perpendicular.
    CHECK(h.trace.sub_c1 + h.trace.sub_c2 == doctest::Approx(h.c).epsilon(1e-9));
    CHECK(h.trace.sub_c2 > 0.0);
    CHECK(h.trace.theta > 0.0);
    CHECK(h.trace.theta < kPi / 2.0 - h.alpha);

    // Construction-defined values, frozen once the invariants held.
    CHECK(h.c == doctest::Approx(4.077941410951).epsilon(1e-10));
    CHECK(h.d == doctest::Approx(0.197042380508).epsilon(1e-10));
    CHECK(h.trace.theta == doctest::Approx(0.265587842316).epsilon(1e-8));

    // Exercised again for the mirror image.
    const HexagonResult m = mirror_hexagon(h);
    CHECK(m.v.s == doctest::Approx(1.2));
    CHECK(verify_hexagon(m).all_pass());
    CHECK(m.trace.sub_c1 + m.trace.sub_c2 == doctest::Approx(m.c).epsilon(1e-9));
}

TEST_CASE("type III hexagon") {
    const double t = 0.8;
    const HexagonResult h = build_hexagon(make_vpoint(t, -0.5 * std::log(9.0)));
    CHECK(h.region == Region::III);
    CHECK(verify_hexagon(h).all_pass());

    const HexagonResult hp = build_hexagon(make_vpoint(t, 0.5 * std::log(9.0)));
    CHECK(hp.region == Region::III);
    CHECK(verify_hexagon(hp).all_pass());
}

TEST_CASE("mirror is an involution and swaps the a-pieces") {
    const HexagonResult h = build_hexagon(make_vpoint(0.66, -0.3));
    const HexagonResult m = mirror_hexagon(h);
    CHECK(m.a1 == doctest::Approx(h.a2).epsilon(1e-12));
    CHECK(m.a2 == doctest::Approx(h.a1).epsilon(1e-12));
    CHECK(m.c == doctest::Approx(h.c).epsilon(1e-10));
    CHECK(m.d == doctest::Approx(h.d).epsilon(1e-10));
    const HexagonResult mm = mirror_hexagon(m);
    for (int i = 0; i < 6; ++i)
        CHECK(dist(mm.vertices[i], h.vertices[i]) < 1e-10);

    const HexagonResult axis = build_hexagon(make_vpoint(0.7, 0.0));
    const HexagonResult axis_m = mirror_hexagon(axis);
    CHECK(axis_m.a1 == doctest::Approx(axis.a2).epsilon(1e-12));
    CHECK(std::fabs(axis.a1 - axis.a2) < 1e-12);
}

TEST_CASE("verification flags an injected fault") {
    HexagonResult h = build_hexagon(make_vpoint(0.8, 0.0));
    REQUIRE(verify_hexagon(h).all_pass());
    h.vertices[2].x += 1e-3;
    const VerificationReport rep = verify_hexagon(h);
    CHECK_FALSE(rep.all_pass());
    bool side_check_failed = false;
    for (const auto& c : rep.checks)
        if (c.name == "opposite-side-equality" && !c.pass)
            side_check_failed = true;
    CHECK(side_check_failed);
}

TEST_CASE("hexagon invariants over a grid") {
    for (int i = 0; i < 12; ++i) {
        const double t = 0.5 + 0.5 * (i + 1) / 13.0;
        const double bound = s_bound(t);
        for (int j = 0; j < 12; ++j) {
            const VPoint v = make_vpoint(t, -bound + 2.0 * bound * (j + 1) / 13.0);
            const HexagonResult h = build_hexagon(v);
            const VerificationReport rep = verify_hexagon(h);
            INFO("t=", t, " s=", v.s, " check=", rep.first_failure());
            CHECK(rep.all_pass());
            CHECK(std::fabs(h.a1 + h.a2 - h.a) < 1e-12);
            CHECK(std::fabs(h.a1 - h.a2 - 2.0 * v.s) < 1e-12);
            CHECK(h.trace.bisection_iterations <= 200);
            CHECK(h.trace.area_residual < 1e-12);
        }
    }
}

TEST_CASE("construction matches the axis closed form") {
    for (int i = 0; i < 50; ++i) {
        const double t = 0.51 + 0.48 * i / 49.0;
        const HexagonResult h = build_hexagon(make_vpoint(t, 0.0));
        CHECK(std::fabs(h.c - c_closed_form(t).c) < 1e-8);
        CHECK(std::fabs(h.c - h.d) < 1e-9);
    }
}

TEST_CASE("sweep closure gap is monotone and brackets the hexagon") {
    for (const VPoint v : {make_vpoint(0.6, -0.25), make_vpoint(0.8, 0.0),
                           make_vpoint(0.8, -1.2), make_vpoint(0.92, -2.0)}) {
        const auto frame = hexagon_detail::make_frame(v);
        const HexagonResult h = build_hexagon(v);
        const double u = h.c;  // root of the sweep
        double prev = hexagon_detail::trial_gap(frame, 0.5 * u);
        CHECK(prev < 0.0);
        for (double f : {0.7, 0.85, 0.95, 1.05, 1.2, 1.5}) {
            const double cur = hexagon_detail::trial_gap(frame, f * u);
            CHECK(cur > prev);
            prev = cur;
        }
        CHECK(prev > 0.0);
        CHECK(std::fabs(hexagon_detail::trial_gap(frame, u)) < 1e-10);
        // The solved cut encloses exactly half the hexagon area.
        CHECK(hexagon_detail::trial_area(frame, u) ==
              doctest::Approx(h.alpha).epsilon(1e-9));
        CHECK(h.trace.area_residual < 1e-12);
    }
}

TEST_CASE("hexagon and cusp bigon tile the punctured torus") {
    for (int i = 1; i <= 6; ++i) {
        const double t = 0.5 + 0.5 * i / 7.0;
        const HexagonResult h = build_hexagon(make_vpoint(t, 0.0));
        CHECK(std::fabs(h.area + bigon_area_numeric(h.alpha) - 2.0 * kPi) <
              1e-6);
    }
}

TEST_CASE("injectivity probe on the half grid") {
    std::vector<std::array<double, 3>> triples;
    for (int i = 0; i < 14; ++i) {
        const double t = 0.5 + 0.5 * (i + 1) / 15.0;
        const double bound = s_bound(t);
        for (int j = 0; j < 14; ++j) {
            const VPoint v = make_vpoint(t, -bound * (j + 1) / 15.0);
            const HexagonResult h = build_hexagon(v);
            triples.push_back({h.a, h.c, h.d});
        }
    }
    double min_sep = 1.0;
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j)
            min_sep = std::min(
                min_sep, std::max({std::fabs(triples[i][0] - triples[j][0]),
                                   std::fabs(triples[i][1] - triples[j][1]),
                                   std::fabs(triples[i][2] - triples[j][2])}));
    CHECK(min_sep > 1e-7);
}
