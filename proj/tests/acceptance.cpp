// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "fricke/io.hpp"
#include "fricke/lengths.hpp"
#include "fricke/oracle.hpp"

using namespace fricke;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Criterion> g_results;

template <typename F>
void run(const std::string& name, F&& body) {
    Criterion c;
    c.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        c.pass = body(c.detail);
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    g_results.push_back(c);
}

const double kT0 = 3.0 * std::sqrt(5.0) / 10.0;
const double kMinLength = 2.0 * (std::log((29.0 + 12.0 * std::sqrt(5.0)) / 11.0) +
                                 std::log((21.0 + 8.0 * std::sqrt(5.0)) / 11.0));

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

}  // namespace

int main() {
    run("1 minimizer", [](std::string& detail) {
        const MinimumResult m = minimize();
        const double dt = std::fabs(m.t0 - kT0);
        const double dl = std::fabs(m.length_min - kMinLength);
        detail = "|t0-3sqrt5/10|=" + fmt(dt) + " |len-min|=" + fmt(dl);
        return dt < 1e-6 && dl < 1e-8;
    });

    run("2 closed form vs construction", [](std::string& detail) {
        double worst_c = 0.0, worst_total = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double t = 0.51 + (0.99 - 0.51) * i / 49.0;
            const HexagonResult h = build_hexagon(VPoint{t, 0.0});
            worst_c = std::max(worst_c, std::fabs(h.c - c_closed_form(t).c));
            worst_total = std::max(
                worst_total,
                std::fabs(2.0 * h.a + h.c + h.d - axis_length(t)));
        }
        detail = "max|c-closed|=" + fmt(worst_c) +
                 " max|total-closed|=" + fmt(worst_total);
        return worst_c < 1e-8 && worst_total < 1e-8;
    });

    run("3 oracle agreement", [](std::string& detail) {
        const OracleMin om = oracle_min_length(GroupWord::a3b2());
        const MinimumResult m = minimize();
        const double delta = std::fabs(om.min_length - m.length_min);
        detail = "oracle=" + std::to_string(om.min_length) +
                 " chart=" + std::to_string(m.length_min) + " delta=" + fmt(delta);
        return delta < 1e-4;
    });

    run("4 hexagon invariants on 40x40 grid", [](std::string& detail) {
        double worst = 0.0;
        for (int i = 0; i < 40; ++i) {
            const double t = 0.5 + 0.5 * (i + 1) / 41.0;
            const double bound = s_bound(t);
            for (int j = 0; j < 40; ++j) {
                const double s = -bound + 2.0 * bound * (j + 1) / 41.0;
                const HexagonResult h = build_hexagon(VPoint{t, s});
                const VerificationReport rep = verify_hexagon(h);
                for (const auto& chk : rep.checks) {
                    if (chk.name == "opposite-side-equality" ||
                        chk.name == "angle-pattern" ||
                        chk.name == "gauss-bonnet-area")
                        worst = std::max(worst, chk.residual);
                }
            }
        }
        detail = "max residual=" + fmt(worst);
        return worst < 1e-9;
    });

    run("5 clearance identities", [](std::string& detail) {
        const double r2 = std::sqrt(2.0) / 2.0;
        const double v1 = std::fabs(clearance_r(r2));
        const double v2 = std::fabs(clearance_r_prime(r2));
        bool strict = true;
        for (int i = 0; i < 30; ++i) {
            const double t = 0.51 + (r2 - 0.02 - 0.51) * i / 29.0;
            const double bound = s_bound(t);
            for (int j = 0; j < 10; ++j) {
                const VPoint v{t, -bound + 2.0 * bound * (j + 1) / 11.0};
                if (classify(v) != Region::I) continue;
                const double a = bigon_from_t(t).a;
                const double a1 = 0.5 * a + v.s, a2 = 0.5 * a - v.s;
                if (!(a1 > clearance_r(t) && a2 > clearance_r(t))) strict = false;
            }
        }
        detail = "r(sqrt2/2)=" + fmt(v1) + " r'(sqrt2/2)=" + fmt(v2) +
                 (strict ? " bounds strict" : " bounds VIOLATED");
        return v1 < 1e-12 && v2 < 1e-12 && strict;
    });

    run("6 quarter-hexagon relations", [](std::string& detail) {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double t = 0.51 + (0.70 - 0.51) * i / 19.0;
            worst = std::max(worst, quarter_hexagon_check(t).max_residual());
        }
        detail = "max residual=" + fmt(worst);
        return worst < 1e-8;
    });

    run("7 properness probes", [](std::string& detail) {
        bool all = true;
        detail.clear();
        for (BoundaryCase c :
             {BoundaryCase::T_TO_ONE, BoundaryCase::T_MID_HIGH,
              BoundaryCase::T_MID_LOW, BoundaryCase::T_SQRT2_I,
              BoundaryCase::T_SQRT2_II, BoundaryCase::T_SQRT2_III}) {
            const bool diverges = divergence_check(c, 30.0, 200);
            // Eventual strict increase of the tail.
            double prev = 0.0;
            int rising = 0;
            for (int k = 1; k <= 200; ++k) {
                VPoint v;
                try {
                    v = boundary_sequence(c, k);
                } catch (const CaseExhausted&) {
                    break;
                }
                const double total = total_length(v).total;
                rising = total > prev ? rising + 1 : 0;
                prev = total;
                if (total > 30.0) break;
            }
            const bool ok = diverges && rising >= 3;
            if (!ok) detail += std::string(to_string(c)) + " FAILED ";
            all = all && ok;
        }
        if (all) detail = "all six cases exceed 30 with increasing tails";
        return all;
    });

    run("8 cusp constants", [](std::string& detail) {
        const double a_hat = bigon_from_t(std::sqrt(2.0) / 2.0).a;
        const double d1 = std::fabs(a_hat - 2.0 * std::log(std::sqrt(2.0) + 1.0));
        double worst = 0.0;
        for (int i = 1; i <= 10; ++i) {
            const double t = 0.5 + 0.5 * i / 11.0;
            const HexagonResult h = build_hexagon(VPoint{t, 0.0});
            worst = std::max(worst, std::fabs(h.area + bigon_area_numeric(h.alpha) -
                                              2.0 * kPi));
        }
        detail = "|a-2log(1+sqrt2)|=" + fmt(d1) + " max|area-2pi|=" + fmt(worst);
        return d1 < 1e-12 && worst < 1e-6;
    });

    run("9 trace recursion self-check", [](std::string& detail) {
        const TraceTriple m{3.0, 3.0, 3.0};
        const double rec = trace_word(m, GroupWord::a3b2());
        const double mat = trace_word_by_matrices(m, GroupWord::a3b2());
        detail = "recursion=" + std::to_string(rec) +
                 " matrices=" + std::to_string(mat);
        return rec == 27.0 && std::fabs(rec - mat) < 1e-8;
    });

    bool all = true;
    for (const auto& c : g_results) {
        std::printf("%s  criterion %-36s (%.2fs)  %s\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                    c.detail.c_str());
        all = all && c.pass;
    }
    std::printf("%s\n", all ? "ALL ACCEPTANCE CRITERIA PASSED"
                            : "ACCEPTANCE FAILURES PRESENT");
    return all ? 0 : 1;
}
