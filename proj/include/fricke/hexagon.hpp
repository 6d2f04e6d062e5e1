#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/decomposition.hpp"
#include "fricke/hplane.hpp"

namespace fricke {

struct BisectionFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Diagnostics of the area-bisection that placed the cut.
struct ConstructionTrace {
    Region region = Region::I;
    int bisection_iterations = 0;
    double translation_param = 0.0;  // cut position along the common perpendicular
    double area_residual = 0.0;      // |enclosed half area - alpha| at termination
    double theta = 0.0;              // corner right-triangle angle at the c/H crossing
    double phi = 0.0;                // area deficit of that corner triangle
    double sub_c1 = 0.0;             // piece of c beyond the common perpendicular
    double sub_c2 = 0.0;             // piece of c adjacent to side a
};

/// Hexagon with equal opposite sides built from a chart point. Vertices are
/// listed so that consecutive sides have lengths (a, c, d, a, c, d) and the
/// vertex angles read (pi-alpha, alpha, pi-alpha, pi-alpha, alpha, pi-alpha)
/// starting after side a. Frame: side a lies on the vertical axis, the common
/// perpendicular of the two a-length sides is the unit semicircle.
struct HexagonResult {
    VPoint v;
    Region region = Region::I;
    double alpha = 0.0;
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
    double a1 = 0.0;  // signed offset of the c-end of side a from the foot
    double a2 = 0.0;  // signed offset of the other end
    std::array<HPoint, 6> vertices{};
    double area = 0.0;
    ConstructionTrace trace;
};

HexagonResult build_hexagon(const VPoint& v);

/// Hexagon for (t, -s): reflection across the common perpendicular.
HexagonResult mirror_hexagon(const HexagonResult& h);

struct CheckResult {
    std::string name;
    double residual = 0.0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    double max_residual() const;
    std::string first_failure() const;
};

/// Re-measures every defining property from the stored vertices.
VerificationReport verify_hexagon(const HexagonResult& h, double tol = 1e-9);

/// Common perpendicular of the two a-length sides in the construction frame.
Geodesic horizontal_line();

/// Half-turn center of the hexagon (lies on the common perpendicular).
HPoint hexagon_center(const HexagonResult& h);

/// Punctured-bigon area by numeric quadrature of the cusp region.
double bigon_area_numeric(double alpha);

namespace hexagon_detail {

/// Normalized construction inputs for s <= 0. c_forward marks the ideal
/// endpoint of the c-carrier toward which side c leaves its a-vertex.
struct Frame {
    HPoint p1, p2;
    Geodesic blue, dpr;
    IdealPoint c_forward;
    double alpha = 0.0;
};

Frame make_frame(const VPoint& v);

/// Signed closure gap of the sweep at sweep position u (arc length of the
/// far c-vertex along its carrier): log-radius of the midpoint of the common
/// perpendicular between the two d-carriers. Zero exactly at the hexagon.
/// NaN where the trial configuration degenerates.
double trial_gap(const Frame& f, double u);

/// Area enclosed against the cut through the horizontal line at sweep
/// position u; equals alpha exactly at the solved hexagon. Sentinel values
/// past either end of the bracket.
double trial_area(const Frame& f, double u);

}  // namespace hexagon_detail

}  // namespace fricke
