#include "fricke/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <vector>

namespace fricke {

namespace {

double tr_reduce(const TraceTriple& tr, const std::string& w,
                 std::unordered_map<std::string, double>& memo) {
    if (w.empty()) return 2.0;
    if (w.size() == 1) return w[0] == 'A' ? tr.x : tr.y;
    if (w.size() == 2) {
        if (w[0] == w[1]) {
            const double t = w[0] == 'A' ? tr.x : tr.y;
            return t * t - 2.0;
        }
        return tr.z;  // AB and BA share a trace
    }
    const auto hit = memo.find(w);
    if (hit != memo.end()) return hit->second;

    // Rotate (a conjugation, trace-invariant) until a repeated letter or a
    // repeated two-letter block sits at the front, then apply
    // tr(L L v) = tr(L) tr(L v) - tr(v).
    double result = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t r = 0; r < w.size(); ++r) {
        std::string rw = w.substr(r) + w.substr(0, r);
        if (rw[0] == rw[1]) {
            const double tl = rw[0] == 'A' ? tr.x : tr.y;
            result = tl * tr_reduce(tr, rw.substr(1), memo) -
                     tr_reduce(tr, rw.substr(2), memo);
            break;
        }
    }
    if (std::isnan(result)) {
        // Strictly alternating word of length >= 3; its length is even after
        // cyclic reduction, so the leading two-letter block repeats.
        result = tr.z * tr_reduce(tr, w.substr(2), memo) -
                 tr_reduce(tr, w.substr(4), memo);
    }
    memo.emplace(w, result);
    return result;
}

// Word length at (x, y), minimized over the two z-roots of the cusp
// relation; both branches carry genuine marked structures and the minimizer
// of a binding-curve length can sit on either one.
double objective(const GroupWord& w, double x, double y) {
    if (x <= 2.0 || y <= 2.0) return std::numeric_limits<double>::infinity();
    double z_hi;
    try {
        z_hi = solve_z(x, y);
    } catch (const Infeasible&) {
        return std::numeric_limits<double>::infinity();
    }
    double best = std::numeric_limits<double>::infinity();
    for (double z : {z_hi, x * y - z_hi}) {
        if (z <= 2.0) continue;
        const double t = trace_word(TraceTriple{x, y, z}, w);
        if (std::fabs(t) <= 2.0) continue;
        best = std::min(best, word_length(t));
    }
    return best;
}

}  // namespace

double markov_residual(const TraceTriple& tr) {
    return std::fabs(tr.x * tr.x + tr.y * tr.y + tr.z * tr.z -
                     tr.x * tr.y * tr.z);
}

double solve_z(double x, double y) {
    const double disc = x * x * y * y - 4.0 * (x * x + y * y);
    if (disc < 0.0) throw Infeasible("solve_z: negative discriminant");
    return 0.5 * (x * y + std::sqrt(disc));
}

GroupWord GroupWord::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("word must be nonempty");
    for (char ch : s)
        if (ch != 'A' && ch != 'B')
            throw std::invalid_argument("word letters must be A or B");
    return GroupWord{s};
}

double trace_word(const TraceTriple& tr, const GroupWord& w) {
    std::unordered_map<std::string, double> memo;
    return tr_reduce(tr, w.letters, memo);
}

double word_length(double trace) {
    if (std::fabs(trace) <= 2.0)
        throw NotHyperbolic("word_length: |trace| must exceed 2");
    return 2.0 * std::acosh(std::fabs(trace) / 2.0);
}

double word_length(const TraceTriple& tr, const GroupWord& w) {
    return word_length(trace_word(tr, w));
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
    return Mat2{m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

MatrixPair matrix_lift(const TraceTriple& tr) {
    if (!(tr.z > 2.0)) throw Infeasible("matrix_lift: z must exceed 2");
    const double b = 0.5 * (-tr.z - std::sqrt(tr.z * tr.z - 4.0));
    return MatrixPair{Mat2{tr.x, 1.0, -1.0, 0.0},
                      Mat2{0.0, b, -1.0 / b, tr.y}};
}

double trace_word_by_matrices(const TraceTriple& tr, const GroupWord& w) {
    const MatrixPair lift = matrix_lift(tr);
    Mat2 prod;
    for (char ch : w.letters) prod = prod * (ch == 'A' ? lift.A : lift.B);
    return prod.trace();
}

OracleMin oracle_min_length(const GroupWord& w, int starts, double tol) {
    std::vector<std::array<double, 2>> seeds;
    const int nx = 5, ny = 4;
    for (int i = 0; i < nx && static_cast<int>(seeds.size()) < starts; ++i)
        for (int j = 0; j < ny && static_cast<int>(seeds.size()) < starts; ++j)
            seeds.push_back({3.0 + 1.5 * i, 3.0 + 2.0 * j});

    OracleMin best;
    best.min_length = std::numeric_limits<double>::infinity();
    for (const auto& seed : seeds) {
        double x = seed[0], y = seed[1];
        double f = objective(w, x, y);
        double h = 0.5;
        int guard = 0;
        while (h > 1e-9 && guard++ < 20000) {
            bool moved = false;
            const double cand[4][2] = {{x + h, y}, {x - h, y}, {x, y + h},
                                       {x, y - h}};
            for (const auto& c : cand) {
                const double fc = objective(w, c[0], c[1]);
                if (fc < f - tol * 1e-3) {
                    x = c[0];
                    y = c[1];
                    f = fc;
                    moved = true;
                    break;
                }
            }
            if (!moved) h *= 0.5;
        }
        if (f < best.min_length) best = OracleMin{x, y, f};
    }
    return best;
}

}  // namespace fricke
