#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "fricke/hexagon.hpp"

namespace fricke {

/// Serializable hexagon record; vertices are Poincare-disk coordinates.
struct HexagonDocument {
    double t = 0.0;
    double s = 0.0;
    std::string region;
    double alpha = 0.0;
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double total = 0.0;
    double area = 0.0;
    std::vector<std::array<double, 2>> vertices;
    int iterations = 0;
    double translation_param = 0.0;

    bool operator==(const HexagonDocument&) const = default;
};

HexagonDocument to_document(const HexagonResult& h);

std::string document_to_json(const HexagonDocument& doc);
HexagonDocument document_from_json(const std::string& text);

struct SweepRow {
    double t = 0.0;
    double s = 0.0;
    Region region = Region::I;
    double a = 0.0;
    double c = 0.0;
    double d = 0.0;
    double total = 0.0;
};

/// Grid sweep over the chart: t_steps values of t across [t_min, t_max], and
/// for each t, s_steps values uniform over the open s-interval with the
/// endpoints excluded by one step. Rows ordered by t then s.
std::vector<SweepRow> run_sweep(double t_min, double t_max, int t_steps,
                                int s_steps);

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Poincare-disk picture: unit circle, one arc path per hexagon side, and the
/// doubling axis (the cut geodesic) dashed.
std::string render_svg(const HexagonResult& h);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace fricke
