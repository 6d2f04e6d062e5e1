#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "fricke/io.hpp"
#include "fricke/lengths.hpp"

using namespace fricke;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("json document round trip is exact") {
    for (const VPoint v : {make_vpoint(0.8, 0.0), make_vpoint(0.8, -1.2),
                           make_vpoint(0.61, 0.37)}) {
        const HexagonDocument doc = to_document(build_hexagon(v));
        const HexagonDocument back = document_from_json(document_to_json(doc));
        CHECK(back == doc);  // field-for-field, bit-identical doubles
    }
}

TEST_CASE("document carries the derived quantities") {
    const HexagonResult h = build_hexagon(make_vpoint(0.8, -1.2));
    const HexagonDocument doc = to_document(h);
    CHECK(doc.region == "II");
    CHECK(doc.total == doctest::Approx(2 * h.a + h.c + h.d).epsilon(1e-15));
    CHECK(doc.vertices.size() == 6);
    for (const auto& p : doc.vertices)
        CHECK(std::hypot(p[0], p[1]) < 1.0);  // disk model
}

TEST_CASE("sweep grid") {
    const auto rows = run_sweep(0.6, 0.9, 10, 10);
    CHECK(rows.size() == 100);
    const double min_total =
        2.0 * (std::log((29.0 + 12.0 * std::sqrt(5.0)) / 11.0) +
               std::log((21.0 + 8.0 * std::sqrt(5.0)) / 11.0));
    double prev_t = 0.0, prev_s = -1e9;
    for (const auto& r : rows) {
        CHECK(r.total > min_total - 1e-9);
        CHECK_NOTHROW(make_vpoint(r.t, r.s));  // strictly inside the chart
        if (r.t == prev_t)
            CHECK(r.s > prev_s);
        else
            CHECK(r.t > prev_t);
        prev_t = r.t;
        prev_s = r.s;
        CHECK(r.total == doctest::Approx(2 * r.a + r.c + r.d).epsilon(1e-12));
    }

    const auto tiny = run_sweep(0.6, 0.7, 2, 2);
    CHECK(tiny.size() == 4);

    CHECK_THROWS_AS(run_sweep(0.4, 0.9, 5, 5), OutsideV);
    CHECK_THROWS_AS(run_sweep(0.6, 0.9, 1, 5), std::invalid_argument);
}

TEST_CASE("csv format") {
    const auto rows = run_sweep(0.6, 0.7, 2, 3);
    std::ostringstream out;
    write_csv(rows, out);
    const std::string text = out.str();
    CHECK(text.rfind("t,s,region,a,c,d,total\n", 0) == 0);
    CHECK(count_occurrences(text, "\n") == static_cast<int>(rows.size()) + 1);

    // Each data line re-parses to a chart point.
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const double t = std::stod(line.substr(0, c1));
        const double s = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        CHECK_NOTHROW(make_vpoint(t, s));
    }
}

TEST_CASE("svg rendering") {
    const HexagonResult h = build_hexagon(make_vpoint(0.75, -0.4));
    const std::string svg = render_svg(h);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(svg, "<path ") == 7);  // 6 sides + doubling axis
    CHECK(count_occurrences(svg, "<circle ") == 1);
    CHECK(count_occurrences(svg, "</svg>") == 1);
    // Tag balance as a well-formedness smoke check.
    CHECK(count_occurrences(svg, "<path") == count_occurrences(svg, "/>") - 1);
}
