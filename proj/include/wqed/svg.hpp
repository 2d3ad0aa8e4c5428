#pragma once

// Self-contained SVG plots: heat maps as colored rect grids and line plots
// as polylines, with plain linear axes. No external plotting dependency;
// these are companions to the CSV output, not bit-exact artifacts.

#include <string>
#include <vector>

namespace wqed::io {

struct HeatMapSpec {
    std::vector<double> x;                   // column coordinates
    std::vector<double> y;                   // row coordinates
    std::vector<std::vector<double>> value;  // value[row][col]
    std::string title, x_label, y_label;
};

void write_heatmap_svg(const std::string& path, const HeatMapSpec& spec);

struct LineSeries {
    std::string label;
    std::vector<double> y;
};

struct LinePlotSpec {
    std::vector<double> x;
    std::vector<LineSeries> series;
    std::string title, x_label, y_label;
};

void write_lineplot_svg(const std::string& path, const LinePlotSpec& spec);

}  // namespace wqed::io
