#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fricke/io.hpp"
#include "fricke/lengths.hpp"
#include "fricke/oracle.hpp"
#include "fricke/verify.hpp"

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void print_kv(const std::string& key, const std::string& value) {
    std::printf("%-12s= %s\n", key.c_str(), value.c_str());
}

int run_hexagon(double t, double s, const std::string& json_path,
                const std::string& svg_path) {
    const fricke::VPoint v = fricke::make_vpoint(t, s);
    const fricke::HexagonResult h = fricke::build_hexagon(v);
    print_kv("t", fmt(h.v.t));
    print_kv("s", fmt(h.v.s));
    print_kv("region", fricke::to_string(h.region));
    print_kv("alpha", fmt(h.alpha));
    print_kv("a", fmt(h.a));
    print_kv("c", fmt(h.c));
    print_kv("d", fmt(h.d));
    print_kv("a1", fmt(h.a1));
    print_kv("a2", fmt(h.a2));
    print_kv("total", fmt(2.0 * h.a + h.c + h.d));
    print_kv("area", fmt(h.area));
    print_kv("iterations", std::to_string(h.trace.bisection_iterations));
    if (!json_path.empty())
        fricke::write_text_file(
            json_path, fricke::document_to_json(fricke::to_document(h)) + "\n");
    if (!svg_path.empty())
        fricke::write_text_file(svg_path, fricke::render_svg(h));
    return 0;
}

int run_length(double t, double s) {
    const fricke::LengthReport r =
        fricke::total_length(fricke::make_vpoint(t, s));
    print_kv("a", fmt(r.a));
    print_kv("c", fmt(r.c));
    print_kv("d", fmt(r.d));
    print_kv("total", fmt(r.total));
    return 0;
}

int run_minimize(double tol) {
    const fricke::MinimumResult m = fricke::minimize(tol);
    print_kv("t0", fmt(m.t0));
    print_kv("s0", fmt(m.s0));
    print_kv("length", fmt(m.length_min));
    print_kv("alpha0", fmt(m.alpha0));
    print_kv("a0", fmt(m.a0));
    print_kv("c0", fmt(m.c0));
    return 0;
}

int run_oracle(bool do_min, const std::vector<double>& trace_xy) {
    if (do_min) {
        const fricke::OracleMin om =
            fricke::oracle_min_length(fricke::GroupWord::a3b2());
        const fricke::MinimumResult m = fricke::minimize();
        print_kv("x", fmt(om.x));
        print_kv("y", fmt(om.y));
        print_kv("min_length", fmt(om.min_length));
        print_kv("chart_min", fmt(m.length_min));
        print_kv("delta", fmt(std::fabs(om.min_length - m.length_min)));
        return 0;
    }
    if (trace_xy.size() == 2) {
        const double z = fricke::solve_z(trace_xy[0], trace_xy[1]);
        const fricke::TraceTriple tr{trace_xy[0], trace_xy[1], z};
        const double tw = fricke::trace_word(tr, fricke::GroupWord::a3b2());
        print_kv("z", fmt(z));
        print_kv("markov_res", fmt(fricke::markov_residual(tr)));
        print_kv("tr_A3B2", fmt(tw));
        print_kv("length", fmt(fricke::word_length(tw)));
        return 0;
    }
    std::cerr << "oracle: pass --min or --trace x y\n";
    return 2;
}

int run_sweep_cmd(double t_min, double t_max, int t_steps, int s_steps,
                  const std::string& out_path) {
    const auto rows = fricke::run_sweep(t_min, t_max, t_steps, s_steps);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
    fricke::write_csv(rows, out);
    if (!out.flush()) throw std::runtime_error("write failed: " + out_path);
    std::printf("%zu rows -> %s\n", rows.size(), out_path.c_str());
    return 0;
}

int run_probe(double bound, int k_max) {
    using fricke::BoundaryCase;
    bool all = true;
    for (BoundaryCase c :
         {BoundaryCase::T_TO_ONE, BoundaryCase::T_MID_HIGH,
          BoundaryCase::T_MID_LOW, BoundaryCase::T_SQRT2_I,
          BoundaryCase::T_SQRT2_II, BoundaryCase::T_SQRT2_III}) {
        const bool ok = fricke::divergence_check(c, bound, k_max);
        std::printf("%-12s length > %s within %d terms: %s\n",
                    fricke::to_string(c), fmt(bound).c_str(), k_max,
                    ok ? "yes" : "NO");
        all = all && ok;
    }
    return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polygon-decomposition coordinates for the once-punctured "
                 "torus with binding curve A^3B^2"};
    app.require_subcommand(1);

    double t = 0.7, s = 0.0, tol = 1e-12;
    double t_min = 0.55, t_max = 0.95, bound = 30.0;
    int t_steps = 10, s_steps = 10, grid = 20, k_max = 200;
    std::string json_path, svg_path, out_path = "sweep.csv";
    bool do_min = false, probes = false;
    std::vector<double> trace_xy;

    auto* c_hex = app.add_subcommand("hexagon", "build one hexagon");
    c_hex->add_option("--t", t)->required();
    c_hex->add_option("--s", s)->required();
    c_hex->add_option("--json", json_path);
    c_hex->add_option("--svg", svg_path);

    auto* c_len = app.add_subcommand("length", "evaluate the length function");
    c_len->add_option("--t", t)->required();
    c_len->add_option("--s", s)->required();

    auto* c_axis = app.add_subcommand("axis", "axis closed form at t");
    c_axis->add_option("--t", t)->required();

    auto* c_min = app.add_subcommand("minimize", "find the global minimum");
    c_min->add_option("--tol", tol);

    auto* c_orc = app.add_subcommand("oracle", "trace-coordinate oracle");
    c_orc->add_flag("--min", do_min);
    c_orc->add_option("--trace", trace_xy)->expected(2);

    auto* c_sweep = app.add_subcommand("sweep", "CSV grid sweep");
    c_sweep->add_option("--t-min", t_min);
    c_sweep->add_option("--t-max", t_max);
    c_sweep->add_option("--t-steps", t_steps);
    c_sweep->add_option("--s-steps", s_steps);
    c_sweep->add_option("--out", out_path);

    auto* c_verify = app.add_subcommand("verify", "run the invariant suites");
    c_verify->add_option("--grid", grid);
    c_verify->add_flag("--probes", probes);

    auto* c_probe = app.add_subcommand("probe", "boundary divergence probes");
    c_probe->add_option("--bound", bound);
    c_probe->add_option("--k-max", k_max);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_hex->parsed()) return run_hexagon(t, s, json_path, svg_path);
        if (c_len->parsed()) return run_length(t, s);
        if (c_axis->parsed()) {
            print_kv("axis_length", fmt(fricke::axis_length(t)));
            return 0;
        }
        if (c_min->parsed()) return run_minimize(tol);
        if (c_orc->parsed()) return run_oracle(do_min, trace_xy);
        if (c_sweep->parsed())
            return run_sweep_cmd(t_min, t_max, t_steps, s_steps, out_path);
        if (c_verify->parsed()) {
            const auto suites = fricke::run_verify_suites(grid, probes);
            bool all = true;
            std::string first;
            for (const auto& sres : suites) {
                std::printf("%-28s max_residual=%-14s %s\n",
                            sres.name.c_str(), fmt(sres.max_residual).c_str(),
                            sres.pass ? "ok" : "FAIL");
                if (!sres.pass && first.empty()) first = sres.name;
                all = all && sres.pass;
            }
            if (!all) {
                std::cerr << "verification failed: " << first << "\n";
                return 3;
            }
            return 0;
        }
        if (c_probe->parsed()) return run_probe(bound, k_max);
    } catch (const fricke::OutsideV& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
