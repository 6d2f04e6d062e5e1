#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace fricke {

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotHyperbolic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Traces (x, y, z) of generators A, B and the product AB, normalized to the
/// positive component x, y, z > 2 of the cusp locus x^2 + y^2 + z^2 = xyz.
struct TraceTriple {
    double x = 3.0;
    double y = 3.0;
    double z = 3.0;
};

/// Residual of the cusp relation for the triple.
double markov_residual(const TraceTriple& tr);

/// Larger root z of z^2 - xyz + (x^2 + y^2) = 0; throws Infeasible when the
/// discriminant is negative.
double solve_z(double x, double y);

/// Word in positive powers of A and B, e.g. "AAABB".
struct GroupWord {
    std::string letters;

    static GroupWord parse(const std::string& s);
    static GroupWord a3b2() { return GroupWord{"AAABB"}; }
};

/// Trace of the word under the representation with the given generator
/// traces, via the Cayley-Hamilton recursion tr(UV) = trU trV - tr(UV^-1).
double trace_word(const TraceTriple& tr, const GroupWord& w);

/// Translation length 2 acosh(|trace| / 2) of a hyperbolic element.
double word_length(double trace);
double word_length(const TraceTriple& tr, const GroupWord& w);

struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double trace() const { return a + d; }
};

Mat2 operator*(const Mat2& m, const Mat2& n);

/// Explicit unit-determinant representatives realizing the given traces.
struct MatrixPair {
    Mat2 A, B;
};

MatrixPair matrix_lift(const TraceTriple& tr);

/// Trace of the word evaluated on an explicit matrix lift (independent route).
double trace_word_by_matrices(const TraceTriple& tr, const GroupWord& w);

struct OracleMin {
    double x = 0.0;
    double y = 0.0;
    double min_length = 0.0;
};

/// Derivative-free minimization of the word length over the feasible (x, y)
/// region of the cusp locus; deterministic multi-start compass search.
OracleMin oracle_min_length(const GroupWord& w, int starts = 20,
                            double tol = 1e-10);

}  // namespace fricke
