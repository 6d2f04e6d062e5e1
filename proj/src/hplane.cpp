#include "fricke/hplane.hpp"

#include <algorithm>
#include <cmath>

namespace fricke {

namespace {

double sq(double v) { return v * v; }

std::array<double, 2> normalized(double x, double y) {
    const double n = std::hypot(x, y);
    return {x / n, y / n};
}

// Boundary angle of an ideal point under the Cayley map; infinity -> 0.
double boundary_angle(const IdealPoint& u) {
    if (u.infinite) return 0.0;
    return std::atan2(-2.0 * u.value, u.value * u.value - 1.0);
}

}  // namespace

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol) {
    if (a.infinite || b.infinite) return a.infinite && b.infinite;
    if (a.value == b.value) return true;
    const double scale = std::max(std::fabs(a.value), std::fabs(b.value));
    return std::fabs(a.value - b.value) <= tol * scale;
}

Geodesic::Geodesic(IdealPoint a, IdealPoint b) : e1(a), e2(b) {
    if (same_ideal(a, b)) throw GeometryError("geodesic endpoints coincide");
    if (e1.infinite) std::swap(e1, e2);
    if (!e2.infinite && e1.value > e2.value) std::swap(e1, e2);
}

bool Geodesic::contains(const HPoint& p, double tol) const {
    if (vertical()) return std::fabs(p.x - axis_x()) <= tol * std::max(1.0, p.y);
    const double r = radius();
    return std::fabs(std::hypot(p.x - center(), p.y) - r) <= tol * std::max(1.0, r);
}

double dist(const HPoint& p, const HPoint& q) {
    const double chord = std::hypot(p.x - q.x, p.y - q.y);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

namespace {

// Endpoints of the semicircle with center m through (px, py); the far
// endpoint is m +- r, the near one comes from m^2 - r^2 = 2 m px - |p|^2
// to avoid cancellation when |m| is large.
Geodesic circle_endpoints(double m, double px, double py) {
    const double r = std::hypot(px - m, py);
    const double prod = 2.0 * m * px - px * px - py * py;  // = m^2 - r^2
    if (m >= 0.0)
        return Geodesic(IdealPoint::finite(prod / (m + r)),
                        IdealPoint::finite(m + r));
    return Geodesic(IdealPoint::finite(m - r),
                    IdealPoint::finite(prod / (m - r)));
}

}  // namespace

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
    const double scale = std::max({1.0, std::fabs(p.x), std::fabs(q.x), p.y, q.y});
    if (std::hypot(p.x - q.x, p.y - q.y) <= 1e-14 * scale)
        throw CoincidentPoints("geodesic_through: points coincide");
    if (std::fabs(p.x - q.x) <= 1e-14 * scale)
        return Geodesic(IdealPoint::finite(p.x), IdealPoint::inf());
    const double m = 0.5 * (p.x + q.x) +
                     0.5 * (p.y - q.y) * (p.y + q.y) / (p.x - q.x);
    return circle_endpoints(m, p.x, p.y);
}

Geodesic geodesic_from_ray(const HPoint& p, double angle) {
    const double c = std::cos(angle);
    if (std::fabs(c) < 1e-15)
        return Geodesic(IdealPoint::finite(p.x), IdealPoint::inf());
    const double m = p.x + p.y * std::tan(angle);
    return circle_endpoints(m, p.x, p.y);
}

std::array<double, 2> direction_toward(const HPoint& p, const HVertex& target) {
    if (std::holds_alternative<HPoint>(target)) {
        const HPoint q = std::get<HPoint>(target);
        const double scale = std::max({1.0, p.y, q.y});
        if (std::fabs(p.x - q.x) <= 1e-14 * scale)
            return {0.0, q.y > p.y ? 1.0 : -1.0};
        const double m = 0.5 * (p.x + q.x) +
                         0.5 * (p.y - q.y) * (p.y + q.y) / (p.x - q.x);
        // Toward decreasing circle angle lies the endpoint m + r.
        const double phi_p = std::atan2(p.y, p.x - m);
        const double phi_q = std::atan2(q.y, q.x - m);
        const double s = (phi_q < phi_p) ? 1.0 : -1.0;
        return normalized(s * p.y, s * (m - p.x));
    }
    const IdealPoint w = std::get<IdealPoint>(target);
    if (w.infinite) return {0.0, 1.0};
    if (std::fabs(w.value - p.x) <= 1e-14 * std::max(1.0, p.y)) return {0.0, -1.0};
    const double m = 0.5 * (p.x + w.value) +
                     0.5 * p.y * p.y / (p.x - w.value);
    const double s = (w.value > m) ? 1.0 : -1.0;
    return normalized(s * p.y, s * (m - p.x));
}

double angle_at(const HPoint& at, const HVertex& toward1, const HVertex& toward2) {
    const auto d1 = direction_toward(at, toward1);
    const auto d2 = direction_toward(at, toward2);
    const double dot = std::clamp(d1[0] * d2[0] + d1[1] * d2[1], -1.0, 1.0);
    return std::acos(dot);
}

namespace {

std::array<double, 2> tangent_at(const Geodesic& g, const HPoint& p) {
    if (g.vertical()) return {0.0, 1.0};
    return normalized(p.y, g.center() - p.x);
}

}  // namespace

double angle_between(const Geodesic& g1, const Geodesic& g2, const HPoint& at) {
    if (!g1.contains(at) || !g2.contains(at))
        throw PointNotOnGeodesic("angle_between: point not on both geodesics");
    const auto t1 = tangent_at(g1, at);
    const auto t2 = tangent_at(g2, at);
    const double dot = std::clamp(std::fabs(t1[0] * t2[0] + t1[1] * t2[1]), 0.0, 1.0);
    return std::acos(dot);
}

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2) {
    if (g1.vertical() && g2.vertical()) return std::nullopt;
    if (g1.vertical() || g2.vertical()) {
        const Geodesic& v = g1.vertical() ? g1 : g2;
        const Geodesic& c = g1.vertical() ? g2 : g1;
        const double y2 = sq(c.radius()) - sq(v.axis_x() - c.center());
        if (y2 <= 0.0) return std::nullopt;
        return HPoint{v.axis_x(), std::sqrt(y2)};
    }
    const double m1 = g1.center(), r1 = g1.radius();
    const double m2 = g2.center(), r2 = g2.radius();
    const double scale = std::max({1.0, std::fabs(m1), std::fabs(m2), r1, r2});
    if (std::fabs(m1 - m2) <= 1e-15 * scale) return std::nullopt;
    const double x =
        0.5 * (m1 + m2) + 0.5 * (r2 - r1) * (r2 + r1) / (m1 - m2);
    const double y2 = sq(r1) - sq(x - m1);
    if (y2 <= 0.0) return std::nullopt;
    return HPoint{x, std::sqrt(y2)};
}

bool endpoints_interleaved(const Geodesic& g1, const Geodesic& g2) {
    const double a1 = boundary_angle(g1.e1);
    const double a2 = boundary_angle(g1.e2);
    auto rel = [&](double t) {
        double r = std::fmod(t - a1, 2.0 * kPi);
        if (r < 0) r += 2.0 * kPi;
        return r;
    };
    const double cut = rel(a2);
    const bool in1 = rel(boundary_angle(g2.e1)) < cut;
    const bool in2 = rel(boundary_angle(g2.e2)) < cut;
    return in1 != in2;
}

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2) {
    if (same_ideal(g1.e1, g2.e1) || same_ideal(g1.e1, g2.e2) ||
        same_ideal(g1.e2, g2.e1) || same_ideal(g1.e2, g2.e2))
        throw AsymptoticGeodesics("common_perpendicular: shared ideal endpoint");
    if (endpoints_interleaved(g1, g2))
        throw IntersectingGeodesics("common_perpendicular: geodesics cross");
    const Isometry m = map_to_vertical(g1);
    const IdealPoint p = m.apply(g2.e1);
    const IdealPoint q = m.apply(g2.e2);
    if (p.infinite || q.infinite)
        throw AsymptoticGeodesics("common_perpendicular: shared ideal endpoint");
    const double prod = p.value * q.value;
    if (prod <= 0.0)
        throw IntersectingGeodesics("common_perpendicular: geodesics cross");
    const double s = std::sqrt(prod);
    const Isometry back = m.inverse();
    return Geodesic(back.apply(IdealPoint::finite(-s)),
                    back.apply(IdealPoint::finite(s)));
}

Geodesic perpendicular_at(const Geodesic& g, const HPoint& p) {
    if (!g.contains(p))
        throw PointNotOnGeodesic("perpendicular_at: point not on geodesic");
    const Isometry m = map_to_vertical(g);
    const HPoint q = m.apply(p);
    const double r = std::hypot(q.x, q.y);
    const Isometry back = m.inverse();
    return Geodesic(back.apply(IdealPoint::finite(-r)),
                    back.apply(IdealPoint::finite(r)));
}

Isometry Isometry::normalized() const {
    const double d = det();
    if (d <= 0.0) throw GeometryError("isometry: nonpositive determinant");
    const double s = std::sqrt(d);
    return Isometry{m11 / s, m12 / s, m21 / s, m22 / s};
}

HPoint Isometry::apply(const HPoint& p) const {
    const double nx = m11 * p.x + m12;
    const double ny = m11 * p.y;
    const double dx = m21 * p.x + m22;
    const double dy = m21 * p.y;
    const double den = dx * dx + dy * dy;
    return HPoint{(nx * dx + ny * dy) / den, p.y * det() / den};
}

IdealPoint Isometry::apply(const IdealPoint& u) const {
    if (u.infinite) {
        if (std::fabs(m21) < 1e-300) return IdealPoint::inf();
        return IdealPoint::finite(m11 / m21);
    }
    const double den = m21 * u.value + m22;
    const double num = m11 * u.value + m12;
    if (std::fabs(den) <= 1e-14 * std::max(1.0, std::fabs(num)))
        return IdealPoint::inf();
    return IdealPoint::finite(num / den);
}

Geodesic Isometry::apply(const Geodesic& g) const {
    return Geodesic(apply(g.e1), apply(g.e2));
}

Isometry operator*(const Isometry& a, const Isometry& b) {
    return Isometry{a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                    a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

Isometry map_to_vertical(const Geodesic& g) {
    if (g.vertical()) return Isometry{1.0, -g.axis_x(), 0.0, 1.0};
    const double u = g.e1.value, v = g.e2.value;
    return Isometry{1.0, -u, -1.0, v}.normalized();
}

Isometry translate_along(const Geodesic& g, double d) {
    const Isometry m = map_to_vertical(g);
    const Isometry dil{std::exp(d / 2.0), 0.0, 0.0, std::exp(-d / 2.0)};
    return m.inverse() * dil * m;
}

Isometry rotate_pi_about(const HPoint& p) {
    return Isometry{p.x / p.y, -p.y - p.x * p.x / p.y, 1.0 / p.y, -p.x / p.y};
}

HPoint Reflection::operator()(const HPoint& p) const {
    if (axis.vertical()) return HPoint{2.0 * axis.axis_x() - p.x, p.y};
    const double m = axis.center();
    const double f = sq(axis.radius()) / (sq(p.x - m) + sq(p.y));
    return HPoint{m + f * (p.x - m), f * p.y};
}

IdealPoint Reflection::operator()(const IdealPoint& u) const {
    if (axis.vertical()) {
        if (u.infinite) return u;
        return IdealPoint::finite(2.0 * axis.axis_x() - u.value);
    }
    const double m = axis.center();
    if (u.infinite) return IdealPoint::finite(m);
    if (std::fabs(u.value - m) <= 1e-300) return IdealPoint::inf();
    return IdealPoint::finite(m + sq(axis.radius()) / (u.value - m));
}

Reflection reflect_across(const Geodesic& g) { return Reflection{g}; }

HPolygon HPolygon::from_vertices(std::vector<HVertex> vs) {
    const std::size_t n = vs.size();
    if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
    HPolygon poly;
    poly.vertices = std::move(vs);
    poly.angles.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const HVertex& prev = poly.vertices[(i + n - 1) % n];
        const HVertex& next = poly.vertices[(i + 1) % n];
        if (std::holds_alternative<IdealPoint>(poly.vertices[i])) {
            poly.angles[i] = 0.0;
            continue;
        }
        poly.angles[i] = angle_at(std::get<HPoint>(poly.vertices[i]), prev, next);
    }
    return poly;
}

double polygon_area(const HPolygon& poly) {
    const std::size_t n = poly.angles.size();
    if (n < 3) throw GeometryError("polygon needs at least 3 vertices");
    double sum = 0.0;
    for (double a : poly.angles) sum += a;
    const double area = (static_cast<double>(n) - 2.0) * kPi - sum;
    if (area <= -kIncidenceTol)
        throw DegeneratePolygon("polygon area is not positive");
    return area;
}

double quad_opposite_side(double alpha, double beta, double d) {
    if (alpha <= 0.0 || alpha >= kPi || beta <= 0.0 || beta >= kPi)
        throw GeometryError("quad_opposite_side: angles must lie in (0, pi)");
    const double rhs =
        (std::cos(alpha) * std::cos(beta) + std::cosh(d)) /
        (std::sin(alpha) * std::sin(beta));
    if (rhs < 1.0 - kAlgebraTol)
        throw NoSuchQuadrilateral("quad_opposite_side: no such quadrilateral");
    return std::acosh(std::max(rhs, 1.0));
}

double trirectangle_angle(double a, double b) {
    const double s = std::sinh(a) * std::sinh(b);
    if (s >= 1.0)
        throw NoSuchQuadrilateral("trirectangle_angle: fourth vertex is ideal");
    return std::acos(s);
}

DiskPoint to_disk(const HPoint& p) {
    const double den = p.x * p.x + sq(p.y + 1.0);
    return DiskPoint{(p.x * p.x + p.y * p.y - 1.0) / den, -2.0 * p.x / den};
}

DiskPoint to_disk(const IdealPoint& u) {
    if (u.infinite) return DiskPoint{1.0, 0.0};
    const double den = u.value * u.value + 1.0;
    return DiskPoint{(u.value * u.value - 1.0) / den, -2.0 * u.value / den};
}

}  // namespace fricke
