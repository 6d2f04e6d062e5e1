#include "fricke/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fricke/hexagon.hpp"
#include "fricke/lengths.hpp"
#include "fricke/oracle.hpp"

namespace fricke {

namespace {

const double kSqrt2Half = std::sqrt(2.0) / 2.0;

struct Collector {
    std::vector<SuiteResult> results;

    void add(const std::string& name, double residual, double tol,
             const std::string& detail = {}) {
        results.push_back({name, residual, residual < tol, detail});
    }
    void add_flag(const std::string& name, bool ok,
                  const std::string& detail = {}) {
        results.push_back({name, ok ? 0.0 : 1.0, ok, detail});
    }
};

std::vector<VPoint> chart_grid(int n, bool nonpositive_only = false) {
    std::vector<VPoint> pts;
    for (int i = 0; i < n; ++i) {
        const double t = 0.5 + 0.5 * (i + 1) / (n + 1);
        const double bound = s_bound(t);
        for (int j = 0; j < n; ++j) {
            double s = -bound + 2.0 * bound * (j + 1) / (n + 1);
            if (nonpositive_only) s = -bound * (j + 1) / (n + 1);
            pts.push_back(make_vpoint(t, s));
        }
    }
    return pts;
}

HPoint random_point(std::mt19937& rng) {
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    std::uniform_real_distribution<double> uy(0.05, 4.0);
    return HPoint{ux(rng), uy(rng)};
}

void hplane_suites(Collector& col, int n) {
    std::mt19937 rng(20240817);
    double sym = 0.0, tri = 0.0;
    for (int i = 0; i < 50 * n; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng),
                     r = random_point(rng);
        sym = std::max(sym, std::fabs(dist(p, q) - dist(q, p)));
        tri = std::max(tri, dist(p, r) - dist(p, q) - dist(q, r));
    }
    col.add("hplane/metric-symmetry", sym, 1e-12);
    col.add("hplane/triangle-inequality", tri, 1e-12);

    double iso = 0.0, invol = 0.0;
    for (int i = 0; i < 20 * n; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng);
        const Geodesic g(IdealPoint::finite(-1.3), IdealPoint::finite(0.7));
        const Isometry t1 = translate_along(g, 0.8) * rotate_pi_about(HPoint{0.3, 1.2});
        iso = std::max(std::fabs(dist(t1.apply(p), t1.apply(q)) - dist(p, q)),
                       iso);
        const Reflection refl = reflect_across(g);
        invol = std::max(invol, dist(refl(refl(p)), p));
    }
    col.add("hplane/isometry-invariance", iso, 1e-10);
    col.add("hplane/reflection-involution", invol, 1e-10);

    double addi = 0.0;
    for (int i = 0; i < 10 * n; ++i) {
        const HPoint a = random_point(rng), b = random_point(rng),
                     c = random_point(rng);
        try {
            const double whole =
                polygon_area(HPolygon::from_vertices({a, b, c}));
            // Split along a cevian through the midpoint of bc.
            const Geodesic bc = geodesic_through(b, c);
            const double d = dist(b, c);
            HPoint m = translate_along(bc, 0.5 * d).apply(b);
            if (dist(m, c) > 0.75 * d)
                m = translate_along(bc, -0.5 * d).apply(b);
            const double part1 = polygon_area(HPolygon::from_vertices({a, b, m}));
            const double part2 = polygon_area(HPolygon::from_vertices({a, m, c}));
            addi = std::max(addi, std::fabs(whole - part1 - part2));
        } catch (const GeometryError&) {
            continue;  // nearly collinear draw
        }
    }
    col.add("hplane/area-additivity", addi, 1e-10);

    double quad = 0.0, tri4 = 0.0;
    for (double u : {0.3, 0.7, 1.2}) {
        for (double w : {0.4, 0.9}) {
            for (double d0 : {0.5, 1.0, 1.6}) {
                const HPoint v1{0.0, 1.0}, v2{0.0, std::exp(d0)};
                const HPoint v4{std::tanh(u), 1.0 / std::cosh(u)};
                const HPoint v3{std::exp(d0) * std::tanh(w),
                                std::exp(d0) / std::cosh(w)};
                const double am = angle_at(v4, HVertex{v3}, HVertex{v1});
                const double bm = angle_at(v3, HVertex{v2}, HVertex{v4});
                quad = std::max(quad, std::fabs(quad_opposite_side(am, bm, d0) -
                                                dist(v3, v4)));
            }
        }
    }
    for (double a0 : {0.2, 0.4, 0.6}) {
        for (double b0 : {0.2, 0.5}) {
            const HPoint v3{std::exp(a0) * std::tanh(b0),
                            std::exp(a0) / std::cosh(b0)};
            const Geodesic circle_a(IdealPoint::finite(-std::exp(a0)),
                                    IdealPoint::finite(std::exp(a0)));
            const Geodesic side34 = perpendicular_at(circle_a, v3);
            const auto v4 = intersect(side34, horizontal_line());
            if (!v4) continue;
            const double gm = angle_at(*v4, HVertex{v3}, HVertex{HPoint{0.0, 1.0}});
            tri4 = std::max(tri4, std::fabs(trirectangle_angle(a0, b0) - gm));
        }
    }
    col.add("hplane/quad-opposite-side", quad, 1e-9);
    col.add("hplane/trirectangle-angle", tri4, 1e-9);
}

void chart_suites(Collector& col, int n) {
    double param = 0.0, evenness = 0.0, negation = 0.0;
    bool type1_ok = true, type2_ok = true;
    for (int i = 0; i < 4 * n; ++i) {
        const double t = 0.5 + 0.5 * (i + 1) / (4.0 * n + 1.0);
        const PuncturedBigon b = bigon_from_t(t);
        const double via_alpha = std::log((1.0 + std::cos(b.alpha / 2.0)) /
                                          (1.0 - std::cos(b.alpha / 2.0)));
        param = std::max(param, std::fabs(b.a - via_alpha));
        const double raw_r =
            0.5 * std::log(1.0 - t) + 0.5 * std::log(1.0 + t) - std::log(t);
        negation = std::max(negation, std::fabs(raw_r + (std::log(t) -
                                                         0.5 * std::log(1.0 - t) -
                                                         0.5 * std::log(1.0 + t))));
    }
    col.add("chart/bigon-parametrizations", param, 1e-12);
    col.add("chart/r-plus-r-prime", negation, 1e-12);

    for (const VPoint& v : chart_grid(n)) {
        evenness = std::max(evenness,
                            classify(v) == classify(VPoint{v.t, -v.s}) ? 0.0
                                                                       : 1.0);
        const double a = bigon_from_t(v.t).a;
        const double a1 = 0.5 * a + v.s, a2 = 0.5 * a - v.s;
        if (classify(v) == Region::I) {
            if (!(a1 > 0.0 && a2 > 0.0)) type1_ok = false;
            if (v.t < kSqrt2Half &&
                !(a1 > clearance_r(v.t) && a2 > clearance_r(v.t)))
                type1_ok = false;
        }
        if (classify(v) == Region::II) {
            const double gap = std::fabs(v.s) - 0.5 * a;
            if (!(gap > 0.0 && gap < clearance_r_prime(v.t))) type2_ok = false;
        }
    }
    col.add("chart/partition-even-in-s", evenness, 0.5);
    col.add_flag("chart/type1-bounds", type1_ok);
    col.add_flag("chart/type2-bounds", type2_ok);
}

void hexagon_suites(Collector& col, int n) {
    double inv = 0.0, axis_cd = 0.0, split = 0.0, closed = 0.0;
    for (const VPoint& v : chart_grid(n)) {
        const HexagonResult h = build_hexagon(v);
        inv = std::max(inv, verify_hexagon(h).max_residual());
        if (h.region == Region::II)
            split = std::max(split,
                             std::fabs(h.trace.sub_c1 + h.trace.sub_c2 - h.c));
    }
    col.add("hexagon/grid-invariants", inv, 1e-9);
    col.add("hexagon/type2-c-split", split, 1e-9);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> ut(0.502, 0.998);
    for (int i = 0; i < 50; ++i) {
        const double t = ut(rng);
        const HexagonResult h = build_hexagon(VPoint{t, 0.0});
        axis_cd = std::max(axis_cd, std::fabs(h.c - h.d));
        closed = std::max(closed, std::fabs(h.c - c_closed_form(t).c));
    }
    col.add("hexagon/axis-c-equals-d", axis_cd, 1e-9);
    col.add("hexagon/closed-form-c", closed, 1e-8);

    // The sweep's closure gap is strictly monotone and brackets the hexagon,
    // and the solved cut encloses exactly half the area.
    bool monotone = true;
    for (const VPoint& v :
         {make_vpoint(0.6, -0.2), make_vpoint(0.8, 0.0), make_vpoint(0.8, -1.2),
          make_vpoint(0.85, -0.5)}) {
        const auto frame = hexagon_detail::make_frame(v);
        const HexagonResult h = build_hexagon(v);
        double prev = hexagon_detail::trial_gap(frame, h.c * 0.6);
        if (!(prev < 0.0)) monotone = false;
        for (double f : {0.8, 0.95, 1.05, 1.3}) {
            const double cur = hexagon_detail::trial_gap(frame, h.c * f);
            if (cur <= prev) monotone = false;
            prev = cur;
        }
        if (!(prev > 0.0)) monotone = false;
        if (std::fabs(hexagon_detail::trial_area(frame, h.c) - h.alpha) > 1e-9)
            monotone = false;
    }
    col.add_flag("hexagon/sweep-monotonicity", monotone);

    // Injectivity probe over the nonpositive-s half grid.
    const auto pts = chart_grid(std::min(n, 24), true);
    std::vector<std::array<double, 3>> triples;
    triples.reserve(pts.size());
    for (const VPoint& v : pts) {
        const HexagonResult h = build_hexagon(v);
        triples.push_back({h.a, h.c, h.d});
    }
    double min_sep = 1.0;
    for (std::size_t i = 0; i < triples.size(); ++i)
        for (std::size_t j = i + 1; j < triples.size(); ++j) {
            const double sep = std::max({std::fabs(triples[i][0] - triples[j][0]),
                                         std::fabs(triples[i][1] - triples[j][1]),
                                         std::fabs(triples[i][2] - triples[j][2])});
            min_sep = std::min(min_sep, sep);
        }
    col.add_flag("hexagon/injectivity-probe", min_sep > 1e-7,
                 "min separation " + std::to_string(min_sep));

    double area_closure = 0.0;
    for (int i = 1; i <= 8; ++i) {
        const double t = 0.5 + 0.5 * i / 9.0;
        const HexagonResult h = build_hexagon(VPoint{t, 0.0});
        area_closure = std::max(area_closure,
                                std::fabs(h.area + bigon_area_numeric(h.alpha) -
                                          2.0 * kPi));
    }
    col.add("hexagon/torus-area-closure", area_closure, 1e-6);
}

void lengths_suites(Collector& col, int n) {
    double even = 0.0, axis_agree = 0.0, c1c2 = 0.0, quarter = 0.0;
    bool positive = true;
    for (const VPoint& v : chart_grid(std::min(n, 12))) {
        even = std::max(even, std::fabs(total_length(v).total -
                                        total_length(VPoint{v.t, -v.s}).total));
    }
    col.add("lengths/even-in-s", even, 1e-9);

    for (int i = 0; i < 50; ++i) {
        const double t = 0.51 + 0.48 * i / 49.0;
        axis_agree = std::max(axis_agree, std::fabs(total_length(VPoint{t, 0.0}).total -
                                                    axis_length(t)));
        const CClosedForm cf = c_closed_form(t);
        c1c2 = std::max(c1c2, std::fabs(cf.c1 + cf.c2 - cf.c));
        if (t < kSqrt2Half && !(cf.c1 > 0.0 && cf.c2 > 0.0)) positive = false;
    }
    col.add("lengths/axis-agreement", axis_agree, 1e-8);
    col.add("lengths/c1-plus-c2", c1c2, 1e-12);
    col.add_flag("lengths/c1-c2-positive", positive);

    for (int i = 0; i < std::max(4, n / 2); ++i) {
        const double t = 0.51 + (0.70 - 0.51) * i / std::max(3, n / 2 - 1);
        quarter = std::max(quarter, quarter_hexagon_check(t).max_residual());
    }
    col.add("lengths/quarter-hexagon", quarter, 1e-8);

    const MinimumResult m = minimize();
    const double h = 1e-5;
    const double d1 =
        (axis_length(m.t0 + h) - axis_length(m.t0 - h)) / (2.0 * h);
    const double d2 = axis_length(m.t0 + h) - 2.0 * axis_length(m.t0) +
                      axis_length(m.t0 - h);
    col.add("lengths/minimum-first-derivative", std::fabs(d1), 1e-6);
    col.add_flag("lengths/minimum-second-difference", d2 > 0.0);
    col.add("lengths/minimum-t0",
            std::fabs(m.t0 - 3.0 * std::sqrt(5.0) / 10.0), 1e-6);
}

void oracle_suites(Collector& col, int n) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(3.0, 9.0);
    double markov = 0.0, cyclic = 0.0, lift = 0.0;
    for (int i = 0; i < 10 * n; ++i) {
        double x = u(rng), y = u(rng);
        if (x * x * y * y < 4.0 * (x * x + y * y)) continue;
        const TraceTriple tr{x, y, solve_z(x, y)};
        markov = std::max(markov, markov_residual(tr));
        const GroupWord w = GroupWord::a3b2();
        const GroupWord rot = GroupWord::parse("AABBA");
        cyclic = std::max(cyclic,
                          std::fabs(trace_word(tr, w) - trace_word(tr, rot)));
        lift = std::max(lift, std::fabs(trace_word(tr, w) -
                                        trace_word_by_matrices(tr, w)) /
                                  std::max(1.0, std::fabs(trace_word(tr, w))));
    }
    col.add("oracle/markov-relation", markov, 1e-10);
    col.add("oracle/cyclic-invariance", cyclic, 1e-10);
    col.add("oracle/lift-agreement", lift, 1e-8);

    const OracleMin om = oracle_min_length(GroupWord::a3b2());
    const MinimumResult m = minimize();
    col.add("oracle/min-agreement", std::fabs(om.min_length - m.length_min),
            1e-4);
}

void probe_suites(Collector& col) {
    for (BoundaryCase c :
         {BoundaryCase::T_TO_ONE, BoundaryCase::T_MID_HIGH,
          BoundaryCase::T_MID_LOW, BoundaryCase::T_SQRT2_I,
          BoundaryCase::T_SQRT2_II, BoundaryCase::T_SQRT2_III}) {
        col.add_flag(std::string("probes/") + to_string(c),
                     divergence_check(c, 30.0, 200));
    }
}

}  // namespace

std::vector<SuiteResult> run_verify_suites(int n, bool probes) {
    Collector col;
    hplane_suites(col, n);
    chart_suites(col, n);
    hexagon_suites(col, n);
    lengths_suites(col, n);
    oracle_suites(col, std::min(n, 10));
    if (probes) probe_suites(col);
    return col.results;
}

}  // namespace fricke
