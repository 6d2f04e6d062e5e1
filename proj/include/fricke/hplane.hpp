#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fricke {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
// Incidence predicates (point-on-geodesic, angle targets) use this tolerance.
inline constexpr double kIncidenceTol = 1e-9;
// Algebraic identities (determinants, closed-form equalities) use this one.
inline constexpr double kAlgebraTol = 1e-12;

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CoincidentPoints : GeometryError {
    using GeometryError::GeometryError;
};
struct PointNotOnGeodesic : GeometryError {
    using GeometryError::GeometryError;
};
struct IntersectingGeodesics : GeometryError {
    using GeometryError::GeometryError;
};
struct AsymptoticGeodesics : GeometryError {
    using GeometryError::GeometryError;
};
struct NoSuchQuadrilateral : GeometryError {
    using GeometryError::GeometryError;
};
struct DegeneratePolygon : GeometryError {
    using GeometryError::GeometryError;
};

/// Point of the upper half-plane model; y > 0.
struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

/// Boundary point: a real number or the point at infinity.
struct IdealPoint {
    double value = 0.0;
    bool infinite = false;

    static IdealPoint finite(double v) { return IdealPoint{v, false}; }
    static IdealPoint inf() { return IdealPoint{0.0, true}; }
};

bool same_ideal(const IdealPoint& a, const IdealPoint& b, double tol = 1e-12);

/// Geodesic stored by its ideal endpoints. Canonical form: infinity last,
/// otherwise endpoints in increasing order.
struct Geodesic {
    IdealPoint e1;
    IdealPoint e2;

    Geodesic(IdealPoint a, IdealPoint b);

    bool vertical() const { return e2.infinite; }
    double axis_x() const { return e1.value; }
    double center() const { return 0.5 * (e1.value + e2.value); }
    double radius() const { return 0.5 * (e2.value - e1.value); }
    bool contains(const HPoint& p, double tol = kIncidenceTol) const;
};

double dist(const HPoint& p, const HPoint& q);

Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Geodesic through p whose tangent at p has Euclidean direction `angle`
/// (radians from the +x axis).
Geodesic geodesic_from_ray(const HPoint& p, double angle);

using HVertex = std::variant<HPoint, IdealPoint>;

/// Unit Euclidean tangent vector at p pointing along the geodesic toward the
/// target (conformality makes Euclidean tangents exact for angle work).
std::array<double, 2> direction_toward(const HPoint& p, const HVertex& target);

/// Interior wedge angle at `at` between the geodesic rays toward the two
/// neighbours. Result in [0, pi].
double angle_at(const HPoint& at, const HVertex& toward1, const HVertex& toward2);

/// Angle between two unoriented geodesics at a common point, in [0, pi/2].
double angle_between(const Geodesic& g1, const Geodesic& g2, const HPoint& at);

std::optional<HPoint> intersect(const Geodesic& g1, const Geodesic& g2);

/// True iff the endpoint pairs separate each other on the boundary circle,
/// i.e. the geodesics cross in the open half-plane.
bool endpoints_interleaved(const Geodesic& g1, const Geodesic& g2);

Geodesic common_perpendicular(const Geodesic& g1, const Geodesic& g2);

Geodesic perpendicular_at(const Geodesic& g, const HPoint& p);

/// Orientation-preserving isometry as a unit-determinant Moebius matrix.
struct Isometry {
    double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;

    static Isometry identity() { return {}; }
    Isometry normalized() const;
    Isometry inverse() const { return Isometry{m22, -m12, -m21, m11}; }
    double det() const { return m11 * m22 - m12 * m21; }

    HPoint apply(const HPoint& p) const;
    IdealPoint apply(const IdealPoint& u) const;
    Geodesic apply(const Geodesic& g) const;
};

Isometry operator*(const Isometry& a, const Isometry& b);

/// Maps g.e1 -> 0 and g.e2 -> infinity; conjugation workhorse.
Isometry map_to_vertical(const Geodesic& g);

/// Hyperbolic translation along g; positive d moves toward the canonical
/// second endpoint (infinity for vertical lines, the larger real otherwise).
Isometry translate_along(const Geodesic& g, double d);

/// Elliptic half-turn about p (involution, fixes p).
Isometry rotate_pi_about(const HPoint& p);

/// Orientation-reversing reflection fixing the axis pointwise.
struct Reflection {
    Geodesic axis;

    HPoint operator()(const HPoint& p) const;
    IdealPoint operator()(const IdealPoint& u) const;
};

Reflection reflect_across(const Geodesic& g);

/// Polygon with measured interior angles; ideal vertices carry angle 0.
struct HPolygon {
    std::vector<HVertex> vertices;
    std::vector<double> angles;

    static HPolygon from_vertices(std::vector<HVertex> vs);
};

/// Gauss-Bonnet area (n-2)*pi - sum(angles).
double polygon_area(const HPolygon& poly);

/// Quadrilateral with two adjacent right angles, opposite angles alpha, beta
/// and side d between the right angles: returns the side c between alpha and
/// beta, cosh c = (cos a cos b + cosh d) / (sin a sin b).
double quad_opposite_side(double alpha, double beta, double d);

/// Trirectangle with sides a, b opposite the fourth angle:
/// gamma = acos(sinh a sinh b).
double trirectangle_angle(double a, double b);

struct DiskPoint {
    double u = 0.0;
    double v = 0.0;
};

/// Cayley map z -> (z - i)/(z + i) onto the Poincare disk (rendering only).
DiskPoint to_disk(const HPoint& p);
DiskPoint to_disk(const IdealPoint& u);

}  // namespace fricke
