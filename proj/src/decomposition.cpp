#include "fricke/decomposition.hpp"

#include <cmath>
#include <cstdio>

#include "fricke/hplane.hpp"

namespace fricke {

namespace {

const double kSqrt2Half = std::sqrt(2.0) / 2.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

const char* to_string(Region r) {
    switch (r) {
        case Region::I: return "I";
        case Region::II: return "II";
        case Region::III: return "III";
    }
    return "?";
}

double s_bound(double t) { return std::log(t / (1.0 - t)); }

VPoint make_vpoint(double t, double s) {
    if (!(t > 0.5 && t < 1.0))
        throw OutsideV("t = " + fmt(t) + " violates 1/2 < t < 1");
    const double bound = s_bound(t);
    if (!(std::fabs(s) < bound))
        throw OutsideV("s = " + fmt(s) + " violates |s| < log(t/(1-t)) = " +
                       fmt(bound));
    return VPoint{t, s};
}

Region classify(const VPoint& v) {
    const double half_a = 0.5 * std::log((1.0 + v.t) / (1.0 - v.t));
    const double gap = std::fabs(v.s) - half_a;
    if (std::fabs(gap) <= kIncidenceTol) return Region::III;
    return gap < 0.0 ? Region::I : Region::II;
}

PuncturedBigon bigon_from_t(double t) {
    if (!(t > 0.5 && t < 1.0))
        throw OutsideV("t = " + fmt(t) + " violates 1/2 < t < 1");
    return PuncturedBigon{t, 2.0 * std::acos(t), std::log((1.0 + t) / (1.0 - t))};
}

double clearance_r(double t) {
    if (t > kSqrt2Half) return 0.0;
    return 0.5 * std::log(1.0 - t) + 0.5 * std::log(1.0 + t) - std::log(t);
}

double clearance_r_prime(double t) {
    if (t < kSqrt2Half) return 0.0;
    return std::log(t) - 0.5 * std::log(1.0 - t) - 0.5 * std::log(1.0 + t);
}

}  // namespace fricke
