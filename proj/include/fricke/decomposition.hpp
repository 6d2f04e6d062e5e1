#pragma once

#include <stdexcept>
#include <string>

namespace fricke {

struct OutsideV : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Region { I, II, III };

const char* to_string(Region r);

/// Chart point of the parameter region V: 1/2 < t < 1, |s| < log(t/(1-t)).
struct VPoint {
    double t = 0.7;
    double s = 0.0;
};

/// Half-width of the s-interval at t, log(t/(1-t)).
double s_bound(double t);

/// Validates both chart inequalities; throws OutsideV naming the violated one.
VPoint make_vpoint(double t, double s);

/// I: |s| < a/2, II: |s| > a/2, III: |s| = a/2 within 1e-9,
/// where a = log((1+t)/(1-t)).
Region classify(const VPoint& v);

/// Cusp piece: equilateral punctured bigon with angle alpha = 2 acos(t) and
/// side length a = log((1+t)/(1-t)).
struct PuncturedBigon {
    double t = 0.0;
    double alpha = 0.0;
    double a = 0.0;
};

PuncturedBigon bigon_from_t(double t);

/// Least clearance along the side-a line so the angled geodesic misses the
/// common perpendicular, log(1-t)/2 + log(1+t)/2 - log(t); clamped to 0 for
/// t > sqrt(2)/2 where the obstruction is vacuous.
double clearance_r(double t);

/// log(t) - log(1-t)/2 - log(1+t)/2; negation of clearance_r, clamped to 0
/// for t < sqrt(2)/2.
double clearance_r_prime(double t);

}  // namespace fricke
