#include "fricke/hexagon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace fricke {

namespace {

constexpr int kMaxBisection = 200;

HPoint point_on_horizontal(double w) {
    // Unit semicircle parametrized by signed arc length from (0, 1).
    return HPoint{std::tanh(w), 1.0 / std::cosh(w)};
}

double wedge(const HPoint& at, const HPoint& u, const HPoint& v) {
    return angle_at(at, HVertex{u}, HVertex{v});
}

// Extended-precision kernel for the final area-defect measurement. A long
// thin hexagon is pinched exponentially against the boundary circle, and the
// cut-area residual of deep probe hexagons sits below double resolution in
// any single frame; 80-bit arithmetic restores the needed headroom.
struct LD2 {
    long double x = 0.0L;
    long double y = 1.0L;
};

LD2 ld_mobius(long double m11, long double m12, long double m21,
              long double m22, const LD2& p) {
    const long double nx = m11 * p.x + m12;
    const long double ny = m11 * p.y;
    const long double dx = m21 * p.x + m22;
    const long double dy = m21 * p.y;
    const long double den = dx * dx + dy * dy;
    const long double det = m11 * m22 - m12 * m21;
    return LD2{(nx * dx + ny * dy) / den, p.y * det / den};
}

std::array<long double, 2> ld_direction(const LD2& p, const LD2& q) {
    const long double dx = p.x - q.x;
    if (fabsl(dx) <= 1e-30L * std::max(p.y, q.y))
        return {0.0L, q.y > p.y ? 1.0L : -1.0L};
    const long double m =
        0.5L * (p.x + q.x) + 0.5L * (p.y - q.y) * (p.y + q.y) / dx;
    const long double phi_p = atan2l(p.y, p.x - m);
    const long double phi_q = atan2l(q.y, q.x - m);
    const long double s = (phi_q < phi_p) ? 1.0L : -1.0L;
    const long double vx = s * p.y, vy = s * (m - p.x);
    const long double n = hypotl(vx, vy);
    return {vx / n, vy / n};
}

long double ld_wedge(const LD2& at, const LD2& a, const LD2& b) {
    const auto d1 = ld_direction(at, a);
    const auto d2 = ld_direction(at, b);
    long double dot = d1[0] * d2[0] + d1[1] * d2[1];
    dot = std::min(1.0L, std::max(-1.0L, dot));
    return acosl(dot);
}

// Interior angle at the far c-vertex of the half-turn hexagon, measured in
// extended precision in the recentered frame.
long double ld_far_angle(const HPoint& p1, const HPoint& p2, const HPoint& x,
                         double w) {
    const long double c = coshl(0.5L * static_cast<long double>(w));
    const long double s = sinhl(0.5L * static_cast<long double>(w));
    const LD2 q1 = ld_mobius(c, -s, -s, c, LD2{p1.x, p1.y});
    const LD2 q2 = ld_mobius(c, -s, -s, c, LD2{p2.x, p2.y});
    const LD2 qx = ld_mobius(c, -s, -s, c, LD2{x.x, x.y});
    const long double n = q1.x * q1.x + q1.y * q1.y;
    const LD2 q4{-q1.x / n, q1.y / n};
    return ld_wedge(qx, q2, q4);
}

// Area defect of the half-turn hexagon over base points (p1, p2, x) with the
// cut at horizontal position w, all in extended precision.
long double ld_defect(const HPoint& p1, const HPoint& p2, const HPoint& x,
                      double alpha, double w) {
    const long double c = coshl(0.5L * static_cast<long double>(w));
    const long double s = sinhl(0.5L * static_cast<long double>(w));
    std::array<LD2, 6> v{};
    const LD2 base[3] = {LD2{p1.x, p1.y}, LD2{p2.x, p2.y}, LD2{x.x, x.y}};
    for (int i = 0; i < 3; ++i) {
        // translate by -w along the horizontal line, then half-turn about i
        v[i] = ld_mobius(c, -s, -s, c, base[i]);
        const long double n = v[i].x * v[i].x + v[i].y * v[i].y;
        v[3 + i] = LD2{-v[i].x / n, v[i].y / n};
    }
    long double sum = 0.0L;
    for (int i = 0; i < 6; ++i)
        sum += ld_wedge(v[i], v[(i + 5) % 6], v[(i + 1) % 6]);
    const long double pi_l = 3.14159265358979323846264338327950288L;
    return 4.0L * pi_l - sum - 2.0L * static_cast<long double>(alpha);
}

// One trial of the sweep: place the far c-vertex at arc length u along the
// c-carrier, erect the d-carrier there at interior angle alpha, and locate
// the midpoint M of the common perpendicular between the two d-carriers.
// The hexagon closes exactly when M lands on the horizontal line, so the
// signed log-radius of M is the root function.
struct TrialEval {
    bool valid = false;
    bool low_side = false;  // d-carrier still crosses the opposite d-carrier
    double g = 0.0;         // log |M|
    HPoint x{0.0, 1.0};
    HPoint m{0.0, 1.0};
};

TrialEval eval_sweep(const hexagon_detail::Frame& f, double u) {
    TrialEval out;
    const double sgn = same_ideal(f.c_forward, f.blue.e2) ? 1.0 : -1.0;
    out.x = translate_along(f.blue, sgn * u).apply(f.p2);
    const auto back = direction_toward(out.x, HVertex{f.p2});
    const double ang_in = std::atan2(-back[1], -back[0]);
    try {
        const Geodesic delta = geodesic_from_ray(out.x, ang_in - (kPi - f.alpha));
        const Geodesic cp = common_perpendicular(f.dpr, delta);
        const auto on_dpr = intersect(cp, f.dpr);
        const auto on_delta = intersect(cp, delta);
        if (!on_dpr || !on_delta) return out;
        const double half = 0.5 * dist(*on_dpr, *on_delta);
        HPoint m = translate_along(cp, half).apply(*on_dpr);
        if (std::fabs(dist(m, *on_delta) - half) > 1e-6 * std::max(1.0, half))
            m = translate_along(cp, -half).apply(*on_dpr);
        out.m = m;
        out.g = std::log(std::hypot(m.x, m.y));
        out.valid = true;
    } catch (const IntersectingGeodesics&) {
        out.low_side = true;
    } catch (const AsymptoticGeodesics&) {
        out.low_side = true;
    } catch (const GeometryError&) {
        // degenerate far configuration; treated as past the bracket
    }
    return out;
}

struct Type2Bits {
    double theta = 0.0;
    double phi = 0.0;
    double sub_c1 = 0.0;
    double sub_c2 = 0.0;
};

// Corner data where side c meets the common perpendicular (regions II, III).
Type2Bits measure_corner(const HPoint& p2, const HPoint& p3, double alpha,
                         Region region) {
    Type2Bits bits;
    if (region == Region::I) return bits;
    const Geodesic c_line = geodesic_through(p2, p3);
    const auto t = intersect(c_line, horizontal_line());
    if (!t) return bits;
    const HPoint foot{0.0, 1.0};
    if (region == Region::III || dist(*t, p2) < 1e-9) {
        bits.theta = angle_at(p2, HVertex{IdealPoint::finite(1.0)}, HVertex{p3});
        bits.sub_c1 = dist(p2, p3);
        bits.sub_c2 = 0.0;
    } else {
        bits.theta = wedge(*t, foot, p2);
        bits.sub_c1 = dist(*t, p3);
        bits.sub_c2 = dist(p2, *t);
    }
    bits.phi = std::max(0.0, kPi / 2.0 - alpha - bits.theta);
    return bits;
}

// Gauss-Bonnet area from signed turning angles; correct for simple polygons
// even when a trial vertex goes reflex.
double turn_area(const std::vector<HPoint>& pts) {
    const std::size_t n = pts.size();
    double turning = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const HPoint& prev = pts[(k + n - 1) % n];
        const HPoint& next = pts[(k + 1) % n];
        const auto rev_in = direction_toward(pts[k], HVertex{prev});
        const auto out = direction_toward(pts[k], HVertex{next});
        const double a_in = std::atan2(-rev_in[1], -rev_in[0]);
        const double a_out = std::atan2(out[1], out[0]);
        double tau = a_out - a_in;
        while (tau > kPi) tau -= 2.0 * kPi;
        while (tau <= -kPi) tau += 2.0 * kPi;
        turning += tau;
    }
    return std::fabs(turning) - 2.0 * kPi;
}

HexagonResult assemble(const VPoint& v, Region region, double alpha, double a,
                       double a1, double a2, const std::array<HPoint, 6>& vs,
                       double area, int iterations, double w, double residual) {
    HexagonResult h;
    h.v = v;
    h.region = region;
    h.alpha = alpha;
    h.a = a;
    h.a1 = a1;
    h.a2 = a2;
    h.vertices = vs;
    h.c = dist(vs[1], vs[2]);
    h.d = dist(vs[2], vs[3]);
    h.area = area;
    h.trace.region = region;
    h.trace.bisection_iterations = iterations;
    h.trace.translation_param = w;
    h.trace.area_residual = residual;
    const Type2Bits bits = measure_corner(vs[1], vs[2], alpha, region);
    h.trace.theta = bits.theta;
    h.trace.phi = bits.phi;
    h.trace.sub_c1 = bits.sub_c1;
    h.trace.sub_c2 = bits.sub_c2;
    return h;
}

}  // namespace

Geodesic horizontal_line() {
    return Geodesic(IdealPoint::finite(-1.0), IdealPoint::finite(1.0));
}

HPoint hexagon_center(const HexagonResult& h) {
    return point_on_horizontal(h.trace.translation_param);
}

namespace hexagon_detail {

Frame make_frame(const VPoint& v) {
    const PuncturedBigon bigon = bigon_from_t(v.t);
    const double a1 = 0.5 * bigon.a + v.s;
    const double a2 = 0.5 * bigon.a - v.s;
    const HPoint p2{0.0, std::exp(a1)};
    const HPoint p1{0.0, std::exp(-a2)};
    const double ray = kPi / 2.0 - bigon.alpha;
    const Geodesic blue = geodesic_from_ray(p2, ray);
    const auto d_can = direction_toward(p2, HVertex{blue.e2});
    const IdealPoint fwd =
        (d_can[0] * std::cos(ray) + d_can[1] * std::sin(ray)) > 0.0 ? blue.e2
                                                                    : blue.e1;
    return Frame{p1, p2, blue,
                 geodesic_from_ray(p1, bigon.alpha - kPi / 2.0), fwd,
                 bigon.alpha};
}

double trial_gap(const Frame& f, double u) {
    const TrialEval e = eval_sweep(f, u);
    if (!e.valid) return std::nan("");
    return e.g;
}

double trial_area(const Frame& f, double u) {
    const TrialEval e = eval_sweep(f, u);
    if (!e.valid) return e.low_side ? 0.0 : 2.0 * f.alpha;
    const double w = std::asinh(e.m.x / e.m.y);
    const Isometry rho = rotate_pi_about(point_on_horizontal(w));
    return turn_area({f.p1, f.p2, e.x, rho.apply(e.x)});
}

}  // namespace hexagon_detail

HexagonResult build_hexagon(const VPoint& v) {
    const VPoint vv = make_vpoint(v.t, v.s);
    if (vv.s > 0.0) return mirror_hexagon(build_hexagon(VPoint{vv.t, -vv.s}));

    const Region region = classify(vv);
    const PuncturedBigon bigon = bigon_from_t(vv.t);
    const double a1 = 0.5 * bigon.a + vv.s;
    const double a2 = 0.5 * bigon.a - vv.s;
    const hexagon_detail::Frame frame0 = hexagon_detail::make_frame(vv);

    // Bracket the root of g(u) = log |M(u)|, negative at the near end of the
    // sweep and positive toward the asymptotic end. Recentering the frame on
    // the deepest reachable cut keeps the far structure representable, so
    // iterate scan-and-recenter until the sign change is caught. Arc length u
    // is frame-invariant throughout.
    auto shift_frame = [](const hexagon_detail::Frame& f, double dw) {
        const Isometry s = translate_along(horizontal_line(), -dw);
        return hexagon_detail::Frame{s.apply(f.p1),   s.apply(f.p2),
                                     s.apply(f.blue), s.apply(f.dpr),
                                     s.apply(f.c_forward), f.alpha};
    };

    hexagon_detail::Frame frame = frame0;
    double w_base = 0.0;
    double lo = 0.0, hi = 0.0;
    bool bracketed = false;
    const int n_scan = 160;
    for (int round = 0; round < 12 && !bracketed; ++round) {
        bool have_lo = false;
        TrialEval deepest;
        for (int i = 0; i < n_scan; ++i) {
            const double u = 1e-5 * std::pow(60.0 / 1e-5,
                                             static_cast<double>(i) /
                                                 (n_scan - 1));
            const TrialEval e = eval_sweep(frame, u);
            if (!e.valid) continue;
            if (e.g < 0.0) {
                lo = u;
                have_lo = true;
                deepest = e;
            } else if (have_lo) {
                hi = u;
                bracketed = true;
                break;
            } else {
                throw BisectionFailure(
                    "build_hexagon: sweep is nonnegative at the near end");
            }
        }
        if (bracketed) break;
        if (!have_lo)
            throw BisectionFailure("build_hexagon: no bracket for the sweep");
        const double dw = std::asinh(deepest.m.x / deepest.m.y);
        if (std::fabs(dw) < 1e-12)
            throw BisectionFailure("build_hexagon: no bracket for the sweep");
        w_base += dw;
        frame = shift_frame(frame, dw);
    }
    if (!bracketed)
        throw BisectionFailure("build_hexagon: no bracket for the sweep");

    // Localize coarsely, then recenter once more on the estimated cut so the
    // final refinement runs with the hexagon surrounding (0, 1).
    int iterations = 0;
    TrialEval coarse = eval_sweep(frame, lo);
    {
        double clo = lo, chi = hi;
        while (iterations < 40 && std::fabs(coarse.g) > 1e-6) {
            const double mid = 0.5 * (clo + chi);
            const TrialEval e = eval_sweep(frame, mid);
            ++iterations;
            if (e.valid && std::fabs(e.g) < std::fabs(coarse.g)) coarse = e;
            const bool go_right = !e.valid ? e.low_side : e.g < 0.0;
            if (go_right)
                clo = mid;
            else
                chi = mid;
        }
        lo = clo;
        hi = chi;
    }
    if (!coarse.valid)
        throw BisectionFailure("build_hexagon: sweep localization failed");

    const double dw2 = std::asinh(coarse.m.x / coarse.m.y);
    w_base += dw2;
    frame = shift_frame(frame, dw2);
    const Isometry unshift =
        translate_along(horizontal_line(), w_base);

    // The recentering can move the root past the coarse sliver; re-establish
    // a straddling bracket in the new frame before refining.
    {
        auto neg_side = [](const TrialEval& e) {
            return e.valid ? e.g < 0.0 : e.low_side;
        };
        auto pos_side = [](const TrialEval& e) {
            return e.valid ? e.g >= 0.0 : !e.low_side;
        };
        double width = std::max(hi - lo, 1e-9 * std::max(1.0, hi));
        TrialEval elo = eval_sweep(frame, lo);
        TrialEval ehi = eval_sweep(frame, hi);
        for (int k = 0; k < 40 && !(neg_side(elo) && pos_side(ehi)); ++k) {
            if (!neg_side(elo)) {
                lo = std::max(lo - width, 1e-7);
                elo = eval_sweep(frame, lo);
            }
            if (!pos_side(ehi)) {
                hi += width;
                ehi = eval_sweep(frame, hi);
            }
            width *= 2.0;
        }
        if (!(neg_side(elo) && pos_side(ehi)))
            throw BisectionFailure(
                "build_hexagon: lost the bracket after recentering");
    }

    TrialEval best = eval_sweep(frame, lo);
    double u_best = lo;
    const double u_spacing =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi);
    while (iterations < 140) {
        const double mid = 0.5 * (lo + hi);
        const TrialEval e = eval_sweep(frame, mid);
        ++iterations;
        if (e.valid && std::fabs(e.g) < std::fabs(best.g)) {
            best = e;
            u_best = mid;
        }
        if (e.valid && std::fabs(e.g) <= 1e-15) break;
        const bool go_right = !e.valid ? e.low_side : e.g < 0.0;
        if (go_right)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < u_spacing) break;
    }
    if (!best.valid || std::fabs(best.g) > 1e-6)
        throw BisectionFailure("build_hexagon: sweep residual did not converge");

    // Coordinate-descent polish: the cut position w is tuned against the
    // extended-precision area defect, and the far c-vertex arc length u
    // against the vertex angle, whose sensitivity grows like 1/d when the d
    // side is short. The side pattern is exact by symmetry throughout.
    const double sgn_c = same_ideal(frame.c_forward, frame.blue.e2) ? 1.0 : -1.0;
    auto x_at = [&](double uv) {
        return translate_along(frame.blue, sgn_c * uv).apply(frame.p2);
    };
    HPoint x_star = best.x;
    auto defect_at = [&](double wv, std::array<HPoint, 6>* vtx_out) {
        if (vtx_out) {
            const Isometry recenter = translate_along(horizontal_line(), -wv);
            const Isometry half_turn{0.0, -1.0, 1.0, 0.0};
            const Isometry back = unshift * recenter.inverse();
            (*vtx_out)[0] = frame0.p1;
            (*vtx_out)[1] = frame0.p2;
            (*vtx_out)[2] = unshift.apply(x_star);
            const std::array<HPoint, 3> bases{frame.p1, frame.p2, x_star};
            for (int i = 0; i < 3; ++i)
                (*vtx_out)[3 + i] =
                    back.apply(half_turn.apply(recenter.apply(bases[i])));
        }
        return static_cast<double>(
            ld_defect(frame.p1, frame.p2, x_star, bigon.alpha, wv));
    };

    double w = std::asinh(best.m.x / best.m.y);
    double u_ref = u_best;

    auto polish = [&](auto&& f, double& z, int budget) {
        double d0 = f(z);
        if (std::isnan(d0) || std::fabs(d0) <= 1e-14) return;
        double step = 4.0 * std::numeric_limits<double>::epsilon() *
                      std::max(1.0, std::fabs(z));
        double za = z, zb = z, da = d0, db = d0;
        for (int k = 0; k < 60 && (da < 0.0) == (db < 0.0); ++k) {
            za -= step;
            zb += step;
            step *= 4.0;
            da = f(za);
            db = f(zb);
            if (std::isnan(da) || std::isnan(db)) return;
        }
        if ((da < 0.0) == (db < 0.0)) return;
        const int stop = std::min(kMaxBisection, iterations + budget);
        while (iterations < stop) {
            const double zm = 0.5 * (za + zb);
            const double dm = f(zm);
            ++iterations;
            if (std::isnan(dm)) break;
            if (std::fabs(dm) < std::fabs(d0)) {
                d0 = dm;
                z = zm;
            }
            if (std::fabs(dm) <= 1e-14) break;
            if ((dm < 0.0) == (da < 0.0)) {
                za = zm;
                da = dm;
            } else {
                zb = zm;
                db = dm;
            }
            if (zb - za < 4.0 * std::numeric_limits<double>::epsilon() *
                              std::max(1.0, std::fabs(zb)))
                break;
        }
    };

    auto area_of_w = [&](double wv) { return defect_at(wv, nullptr); };
    auto angle_of_u = [&](double uv) {
        return static_cast<double>(
            ld_far_angle(frame.p1, frame.p2, x_at(uv), w) -
            static_cast<long double>(bigon.alpha));
    };

    for (int round = 0; round < 2; ++round) {
        polish(area_of_w, w, 40);
        polish(angle_of_u, u_ref, 40);
        x_star = x_at(u_ref);
    }
    polish(area_of_w, w, 40);

    std::array<HPoint, 6> vs{};
    const double defect = defect_at(w, &vs);
    const double residual = 0.5 * std::fabs(defect);
    if (std::isnan(defect) || residual > 1e-12)
        throw BisectionFailure("build_hexagon: area residual did not converge");
    return assemble(vv, region, bigon.alpha, bigon.a, a1, a2, vs,
                    2.0 * bigon.alpha + defect, iterations, w_base + w,
                    residual);
}

HexagonResult mirror_hexagon(const HexagonResult& h) {
    const Reflection sigma = reflect_across(horizontal_line());
    HexagonResult m = h;
    m.v = VPoint{h.v.t, -h.v.s};
    m.region = classify(m.v);
    m.a1 = 0.5 * h.a + m.v.s;
    m.a2 = 0.5 * h.a - m.v.s;
    for (int i = 0; i < 6; ++i) m.vertices[i] = sigma(h.vertices[i]);
    m.c = dist(m.vertices[1], m.vertices[2]);
    m.d = dist(m.vertices[2], m.vertices[3]);
    m.area = h.area;  // reflections preserve area
    m.trace.region = m.region;
    const Type2Bits bits =
        measure_corner(m.vertices[1], m.vertices[2], m.alpha, m.region);
    m.trace.theta = bits.theta;
    m.trace.phi = bits.phi;
    m.trace.sub_c1 = bits.sub_c1;
    m.trace.sub_c2 = bits.sub_c2;
    return m;
}

bool VerificationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

std::string VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return c.name;
    return {};
}

VerificationReport verify_hexagon(const HexagonResult& h, double tol) {
    VerificationReport rep;
    auto push = [&](const std::string& name, double residual) {
        rep.checks.push_back({name, residual, residual < tol});
    };

    // Every check below is isometry-invariant; measuring in the frame
    // recentered on the half-turn center keeps the re-measurement well
    // conditioned for long thin hexagons.
    const Isometry recenter =
        translate_along(horizontal_line(), -h.trace.translation_param);
    std::array<HPoint, 6> vs{};
    for (int i = 0; i < 6; ++i) vs[i] = recenter.apply(h.vertices[i]);

    std::array<double, 6> side{};
    for (int i = 0; i < 6; ++i) side[i] = dist(vs[i], vs[(i + 1) % 6]);
    const double opp = std::max({std::fabs(side[0] - side[3]),
                                 std::fabs(side[1] - side[4]),
                                 std::fabs(side[2] - side[5])});
    push("opposite-side-equality", opp);
    push("side-a-matches-chart", std::fabs(side[0] - h.a));

    const double pa = kPi - h.alpha;
    const std::array<double, 6> expected{pa, h.alpha, pa, pa, h.alpha, pa};
    double angle_res = 0.0;
    for (int k = 0; k < 6; ++k) {
        const int i = (k + 1) % 6;
        const double ang = wedge(vs[i], vs[(i + 5) % 6], vs[(i + 1) % 6]);
        angle_res = std::max(angle_res, std::fabs(ang - expected[k]));
    }
    push("angle-pattern", angle_res);

    double sum = 0.0;
    for (int i = 0; i < 6; ++i)
        sum += wedge(vs[i], vs[(i + 5) % 6], vs[(i + 1) % 6]);
    push("gauss-bonnet-area", std::fabs((4.0 * kPi - sum) - 2.0 * h.alpha));

    const Isometry rho = rotate_pi_about(HPoint{0.0, 1.0});
    double closure = 0.0;
    for (int i = 0; i < 6; ++i)
        closure = std::max(closure, dist(rho.apply(vs[i]), vs[(i + 3) % 6]));
    push("rotation-closure", closure);

    push("a1-plus-a2", std::fabs(h.a1 + h.a2 - h.a));
    push("a1-minus-a2", std::fabs(h.a1 - h.a2 - 2.0 * h.v.s));
    return rep;
}

double bigon_area_numeric(double alpha) {
    // Twice the cusp strip above the unit circle between x = +-cos(alpha/2),
    // with the y-integral of 1/y^2 already taken.
    const double c = std::cos(alpha / 2.0);
    const int n = 4000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x0 = -c + 2.0 * c * i / n;
        const double x1 = -c + 2.0 * c * (i + 1) / n;
        const double xm = 0.5 * (x0 + x1);
        auto f = [](double x) { return 1.0 / std::sqrt(1.0 - x * x); };
        sum += (x1 - x0) / 6.0 * (f(x0) + 4.0 * f(xm) + f(x1));
    }
    return 2.0 * sum;
}

}  // namespace fricke
