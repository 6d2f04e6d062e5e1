#pragma once

#include <stdexcept>
#include <vector>

#include "fricke/hexagon.hpp"

namespace fricke {

struct CaseExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Curve length at a chart point: total = 2a + c + d (the b side equals a).
struct LengthReport {
    VPoint v;
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
    double total = 0.0;
};

LengthReport total_length(const VPoint& v);

/// Closed form of the length on the axis s = 0:
/// 2 log((sqrt(5t^2-1) + 2t^2) / ((2t-1)(1-t))).
double axis_length(double t);

/// Axis closed form of side c and its two sub-pieces. The sub-pieces are the
/// split of c at the foot of its common perpendicular with the symmetry axis;
/// c1 changes sign at t = sqrt(2)/2 while c1 + c2 = c holds throughout.
struct CClosedForm {
    double c = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

CClosedForm c_closed_form(double t);

/// Measures the quarter-hexagon pieces at s = 0 and reports the residuals of
/// the five right-angled-quadrilateral relations plus the two cosh^2
/// identities. Valid for t in (1/2, sqrt(2)/2).
struct QuarterReport {
    double v = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    double max_residual() const;
};

QuarterReport quarter_hexagon_check(double t);

struct MinimumResult {
    double t0 = 0.0;
    double s0 = 0.0;
    double length_min = 0.0;
    double alpha0 = 0.0;
    double a0 = 0.0;
    double c0 = 0.0;
};

/// Golden-section minimization of axis_length plus off-axis evenness probes.
MinimumResult minimize(double tol = 1e-12);

/// Boundary-escape sequences realizing the divergence of the length function.
enum class BoundaryCase {
    T_TO_ONE,
    T_MID_HIGH,
    T_MID_LOW,
    T_SQRT2_I,
    T_SQRT2_II,
    T_SQRT2_III,
};

const char* to_string(BoundaryCase c);

VPoint boundary_sequence(BoundaryCase c, int k);

/// True iff total_length exceeds `bound` somewhere along the first k_max
/// sequence points (stops early at double-precision exhaustion).
bool divergence_check(BoundaryCase c, double bound, int k_max);

}  // namespace fricke
