#include "fricke/lengths.hpp"

#include <algorithm>
#include <cmath>

namespace fricke {

namespace {

const double kSqrt2Half = std::sqrt(2.0) / 2.0;

void require_chart_t(double t) {
    if (!(t > 0.5 && t < 1.0)) throw OutsideV("t must lie in (1/2, 1)");
}

}  // namespace

LengthReport total_length(const VPoint& v) {
    const HexagonResult h = build_hexagon(v);
    return LengthReport{v, h.a, h.c, h.d, 2.0 * h.a + h.c + h.d};
}

double axis_length(double t) {
    require_chart_t(t);
    return 2.0 * std::log((std::sqrt(5.0 * t * t - 1.0) + 2.0 * t * t) /
                          ((2.0 * t - 1.0) * (1.0 - t)));
}

CClosedForm c_closed_form(double t) {
    require_chart_t(t);
    const double disc = std::sqrt((4.0 * t * t - 1.0) * (1.0 - t * t));
    CClosedForm out;
    out.c1 = std::log((2.0 * t + 1.0) * (1.0 - t) / disc);
    out.c2 = std::log((std::sqrt(5.0 * t * t - 1.0) + 2.0 * t * t) / disc);
    out.c = std::log((std::sqrt(5.0 * t * t - 1.0) + 2.0 * t * t) /
                     ((2.0 * t - 1.0) * (1.0 + t)));
    return out;
}

bool QuarterReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double QuarterReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

QuarterReport quarter_hexagon_check(double t) {
    if (!(t > 0.5 && t < kSqrt2Half))
        throw OutsideV("quarter_hexagon_check: t must lie in (1/2, sqrt(2)/2)");
    const HexagonResult h = build_hexagon(VPoint{t, 0.0});
    const double alpha = h.alpha;
    const HPoint foot{0.0, 1.0};
    const HPoint center = hexagon_center(h);
    const Geodesic c_line = geodesic_through(h.vertices[1], h.vertices[2]);
    const Geodesic perp = common_perpendicular(c_line, horizontal_line());
    const auto on_c = intersect(perp, c_line);
    const auto on_h = intersect(perp, horizontal_line());
    if (!on_c || !on_h)
        throw GeometryError("quarter_hexagon_check: degenerate perpendicular");

    QuarterReport rep;
    rep.v = dist(*on_c, *on_h);
    rep.h1 = dist(*on_h, foot);
    rep.h2 = dist(center, *on_h);
    rep.c1 = dist(h.vertices[1], *on_c);
    rep.c2 = dist(*on_c, h.vertices[2]);

    auto push = [&rep](const std::string& name, double residual) {
        rep.checks.push_back({name, residual, residual < 1e-8});
    };
    const double sa = std::sin(kPi - alpha);
    push("cosh-v", std::fabs(std::cosh(rep.v) - std::cosh(h.a / 2.0) * sa));
    push("cosh-h1", std::fabs(std::cosh(rep.h1) - std::cosh(rep.c1) * sa));
    push("cos-pi-alpha",
         std::fabs(std::cos(kPi - alpha) - std::sinh(rep.h1) * std::sinh(rep.v)));
    push("cosh-h2", std::fabs(std::cosh(rep.h2) -
                              std::cosh(rep.c2) * std::sin(alpha / 2.0)));
    push("cos-half-alpha",
         std::fabs(std::cos(alpha / 2.0) - std::sinh(rep.h2) * std::sinh(rep.v)));
    const double denom = (4.0 * t * t - 1.0) * (1.0 - t * t);
    push("cosh2-c1", std::fabs(std::cosh(rep.c1) * std::cosh(rep.c1) -
                               t * t / denom));
    push("cosh2-c2", std::fabs(std::cosh(rep.c2) * std::cosh(rep.c2) -
                               (5.0 * t * t - 1.0) / denom));
    return rep;
}

MinimumResult minimize(double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.5 + 1e-9, hi = 1.0 - 1e-9;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = axis_length(c), fd = axis_length(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = axis_length(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = axis_length(d);
        }
    }
    MinimumResult out;
    out.t0 = 0.5 * (lo + hi);
    out.s0 = 0.0;
    out.length_min = axis_length(out.t0);
    out.alpha0 = 2.0 * std::acos(out.t0);
    out.a0 = std::log((1.0 + out.t0) / (1.0 - out.t0));
    out.c0 = c_closed_form(out.t0).c;
    for (double delta : {0.01, 0.1}) {
        if (total_length(make_vpoint(out.t0, delta)).total < out.length_min ||
            total_length(make_vpoint(out.t0, -delta)).total < out.length_min)
            throw std::runtime_error("minimize: off-axis evenness probe failed");
    }
    return out;
}

const char* to_string(BoundaryCase c) {
    switch (c) {
        case BoundaryCase::T_TO_ONE: return "T_TO_ONE";
        case BoundaryCase::T_MID_HIGH: return "T_MID_HIGH";
        case BoundaryCase::T_MID_LOW: return "T_MID_LOW";
        case BoundaryCase::T_SQRT2_I: return "T_SQRT2_I";
        case BoundaryCase::T_SQRT2_II: return "T_SQRT2_II";
        case BoundaryCase::T_SQRT2_III: return "T_SQRT2_III";
    }
    return "?";
}

VPoint boundary_sequence(BoundaryCase c, int k) {
    if (k < 1) throw std::invalid_argument("boundary_sequence: k must be >= 1");
    const double shrink = std::pow(2.0, -k);
    auto guard = [](double t, double s) {
        if (1.0 - t < 1e-14 || s_bound(t) - std::fabs(s) < 1e-14)
            throw CaseExhausted("boundary_sequence: double precision exhausted");
        return make_vpoint(t, s);
    };
    switch (c) {
        case BoundaryCase::T_TO_ONE:
            // k = 1 would land on the chart boundary t = 1/2; start inside.
            return guard(1.0 - std::pow(2.0, -std::max(k, 2)), 0.0);
        case BoundaryCase::T_MID_HIGH: {
            const double t = 0.8;
            return guard(t, -s_bound(t) + clearance_r_prime(t) * shrink);
        }
        case BoundaryCase::T_MID_LOW: {
            const double t = 0.6;
            return guard(t, -s_bound(t) * (1.0 - shrink));
        }
        case BoundaryCase::T_SQRT2_I: {
            const double t = std::sqrt(2.0) / 2.0 - 0.05 * shrink;
            return guard(t, -s_bound(t) + 0.05 * shrink);
        }
        case BoundaryCase::T_SQRT2_II: {
            const double t = std::sqrt(2.0) / 2.0 + 0.05 * shrink;
            const double a = std::log((1.0 + t) / (1.0 - t));
            return guard(t, -0.5 * a - 0.5 * clearance_r_prime(t));
        }
        case BoundaryCase::T_SQRT2_III: {
            const double t = std::sqrt(2.0) / 2.0 + 0.05 * shrink;
            const double a = std::log((1.0 + t) / (1.0 - t));
            return guard(t, -0.5 * a);
        }
    }
    throw std::invalid_argument("boundary_sequence: unknown case");
}

bool divergence_check(BoundaryCase c, double bound, int k_max) {
    if (!(bound > 0.0))
        throw std::invalid_argument("divergence_check: bound must be positive");
    for (int k = 1; k <= k_max; ++k) {
        VPoint v;
        try {
            v = boundary_sequence(c, k);
        } catch (const CaseExhausted&) {
            return false;
        }
        if (total_length(v).total > bound) return true;
    }
    return false;
}

}  // namespace fricke
