#include "fricke/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace fricke {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Region region_from_string(const std::string& s) {
    if (s == "I") return Region::I;
    if (s == "II") return Region::II;
    if (s == "III") return Region::III;
    throw std::invalid_argument("unknown region tag: " + s);
}

// One SVG path along the disk geodesic between two disk points: a circular
// arc of the circle orthogonal to the unit circle, or a chord through 0.
std::string disk_path(const DiskPoint& p, const DiskPoint& q) {
    const double det = 2.0 * (p.u * q.v - p.v * q.u);
    const double pu2 = p.u * p.u + p.v * p.v + 1.0;
    const double qu2 = q.u * q.u + q.v * q.v + 1.0;
    char buf[256];
    if (std::fabs(det) < 1e-9) {
        std::snprintf(buf, sizeof(buf), "M %.6f %.6f L %.6f %.6f", p.u, -p.v,
                      q.u, -q.v);
        return buf;
    }
    const double mx = (pu2 * q.v - qu2 * p.v) / det;
    const double my = (qu2 * p.u - pu2 * q.u) / det;
    const double r = std::sqrt(std::max(mx * mx + my * my - 1.0, 0.0));
    // Emitted coordinates flip v; pick the sweep matching the minor arc.
    const double a1 = std::atan2(-p.v + my, p.u - mx);
    const double a2 = std::atan2(-q.v + my, q.u - mx);
    double delta = a2 - a1;
    while (delta > kPi) delta -= 2.0 * kPi;
    while (delta <= -kPi) delta += 2.0 * kPi;
    const int sweep = delta > 0.0 ? 1 : 0;
    std::snprintf(buf, sizeof(buf), "M %.6f %.6f A %.6f %.6f 0 0 %d %.6f %.6f",
                  p.u, -p.v, r, r, sweep, q.u, -q.v);
    return buf;
}

}  // namespace

HexagonDocument to_document(const HexagonResult& h) {
    HexagonDocument doc;
    doc.t = h.v.t;
    doc.s = h.v.s;
    doc.region = to_string(h.region);
    doc.alpha = h.alpha;
    doc.a = h.a;
    doc.c = h.c;
    doc.d = h.d;
    doc.a1 = h.a1;
    doc.a2 = h.a2;
    doc.total = 2.0 * h.a + h.c + h.d;
    doc.area = h.area;
    for (const auto& v : h.vertices) {
        const DiskPoint p = to_disk(v);
        doc.vertices.push_back({p.u, p.v});
    }
    doc.iterations = h.trace.bisection_iterations;
    doc.translation_param = h.trace.translation_param;
    return doc;
}

std::string document_to_json(const HexagonDocument& doc) {
    nlohmann::json j;
    j["t"] = doc.t;
    j["s"] = doc.s;
    j["region"] = doc.region;
    j["alpha"] = doc.alpha;
    j["a"] = doc.a;
    j["c"] = doc.c;
    j["d"] = doc.d;
    j["a1"] = doc.a1;
    j["a2"] = doc.a2;
    j["total"] = doc.total;
    j["area"] = doc.area;
    j["vertices"] = doc.vertices;
    j["construction"] = {{"iterations", doc.iterations},
                         {"translation_param", doc.translation_param}};
    return j.dump(2);
}

HexagonDocument document_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    HexagonDocument doc;
    doc.t = j.at("t").get<double>();
    doc.s = j.at("s").get<double>();
    doc.region = j.at("region").get<std::string>();
    region_from_string(doc.region);
    doc.alpha = j.at("alpha").get<double>();
    doc.a = j.at("a").get<double>();
    doc.c = j.at("c").get<double>();
    doc.d = j.at("d").get<double>();
    doc.a1 = j.at("a1").get<double>();
    doc.a2 = j.at("a2").get<double>();
    doc.total = j.at("total").get<double>();
    doc.area = j.at("area").get<double>();
    doc.vertices = j.at("vertices").get<std::vector<std::array<double, 2>>>();
    doc.iterations = j.at("construction").at("iterations").get<int>();
    doc.translation_param =
        j.at("construction").at("translation_param").get<double>();
    return doc;
}

std::vector<SweepRow> run_sweep(double t_min, double t_max, int t_steps,
                                int s_steps) {
    if (!(t_min > 0.5 && t_max < 1.0 && t_min <= t_max))
        throw OutsideV("sweep: t range must lie inside (1/2, 1)");
    if (t_steps < 2 || s_steps < 2)
        throw std::invalid_argument("sweep: steps must be >= 2");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(t_steps) * s_steps);
    for (int i = 0; i < t_steps; ++i) {
        const double t = t_min + (t_max - t_min) * i / (t_steps - 1);
        const double bound = s_bound(t);
        for (int j = 1; j <= s_steps; ++j) {
            const double s = -bound + 2.0 * bound * j / (s_steps + 1);
            VPoint v;
            try {
                v = make_vpoint(t, s);
            } catch (const OutsideV&) {
                continue;  // omit, never zero-fill
            }
            const HexagonResult h = build_hexagon(v);
            rows.push_back(SweepRow{t, s, h.region, h.a, h.c, h.d,
                                    2.0 * h.a + h.c + h.d});
        }
    }
    return rows;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "t,s,region,a,c,d,total\n";
    for (const auto& r : rows) {
        out << fmt(r.t) << ',' << fmt(r.s) << ',' << to_string(r.region) << ','
            << fmt(r.a) << ',' << fmt(r.c) << ',' << fmt(r.d) << ','
            << fmt(r.total) << '\n';
    }
}

std::string render_svg(const HexagonResult& h) {
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"600\" height=\"600\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n"
        << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" "
           "stroke=\"#888888\" stroke-width=\"0.006\"/>\n";
    for (int i = 0; i < 6; ++i) {
        const DiskPoint p = to_disk(h.vertices[i]);
        const DiskPoint q = to_disk(h.vertices[(i + 1) % 6]);
        svg << "  <path d=\"" << disk_path(p, q)
            << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"0.012\"/>\n";
    }
    // Doubling axis: the cut geodesic through the hexagon center,
    // perpendicular to the common perpendicular of the a-sides.
    const double w = h.trace.translation_param;
    const DiskPoint e1 = to_disk(IdealPoint::finite(std::tanh(w / 2.0)));
    const DiskPoint e2 = to_disk(IdealPoint::finite(1.0 / std::tanh(w / 2.0)));
    svg << "  <path d=\"" << disk_path(e1, e2)
        << "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"0.006\" "
           "stroke-dasharray=\"0.03,0.02\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

}  // namespace fricke
