#include "wqed/svg.hpp"

#include "wqed/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wqed::io {

namespace {

constexpr int plot_w = 640, plot_h = 480;
constexpr int margin_left = 70, margin_right = 90, margin_top = 40, margin_bottom = 55;

// viridis anchors, linearly interpolated
constexpr double ramp[9][3] = {
    {0.267, 0.005, 0.329}, {0.283, 0.141, 0.458}, {0.254, 0.265, 0.530},
    {0.207, 0.372, 0.553}, {0.164, 0.471, 0.558}, {0.128, 0.567, 0.551},
    {0.135, 0.659, 0.518}, {0.267, 0.749, 0.441}, {0.993, 0.906, 0.144},
};

void color_of(double t, int rgb[3]) {
    t = std::clamp(t, 0.0, 1.0) * 8.0;
    const int i = std::min(7, static_cast<int>(t));
    const double f = t - i;
    for (int c = 0; c < 3; ++c)
        rgb[c] = static_cast<int>(std::lround(255.0 * (ramp[i][c] + f * (ramp[i + 1][c] - ramp[i][c]))));
}

struct Axis {
    double lo, hi;
    double scale(double v, double pix_lo, double pix_hi) const {
        return hi == lo ? pix_lo : pix_lo + (v - lo) / (hi - lo) * (pix_hi - pix_lo);
    }
};

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

void draw_frame_and_ticks(std::FILE* fp, const Axis& ax, const Axis& ay, const std::string& title,
                          const std::string& x_label, const std::string& y_label) {
    const int x0 = margin_left, x1 = plot_w - margin_right;
    const int y0 = plot_h - margin_bottom, y1 = margin_top;
    std::fprintf(fp,
                 "<rect x='%d' y='%d' width='%d' height='%d' fill='none' stroke='black'/>\n",
                 x0, y1, x1 - x0, y0 - y1);
    for (int i = 0; i <= 4; ++i) {
        const double fx = ax.lo + (ax.hi - ax.lo) * i / 4.0;
        const double px = ax.scale(fx, x0, x1);
        std::fprintf(fp, "<line x1='%.1f' y1='%d' x2='%.1f' y2='%d' stroke='black'/>\n", px, y0,
                     px, y0 + 5);
        std::fprintf(fp,
                     "<text x='%.1f' y='%d' font-size='12' text-anchor='middle'>%s</text>\n",
                     px, y0 + 20, tick_label(fx).c_str());
        const double fy = ay.lo + (ay.hi - ay.lo) * i / 4.0;
        const double py = ay.scale(fy, y0, y1);
        std::fprintf(fp, "<line x1='%d' y1='%.1f' x2='%d' y2='%.1f' stroke='black'/>\n", x0 - 5,
                     py, x0, py);
        std::fprintf(fp,
                     "<text x='%d' y='%.1f' font-size='12' text-anchor='end'>%s</text>\n",
                     x0 - 8, py + 4, tick_label(fy).c_str());
    }
    std::fprintf(fp,
                 "<text x='%d' y='%d' font-size='14' text-anchor='middle'>%s</text>\n",
                 (x0 + x1) / 2, margin_top - 15, title.c_str());
    std::fprintf(fp,
                 "<text x='%d' y='%d' font-size='13' text-anchor='middle'>%s</text>\n",
                 (x0 + x1) / 2, plot_h - 12, x_label.c_str());
    std::fprintf(fp,
                 "<text x='18' y='%d' font-size='13' text-anchor='middle' "
                 "transform='rotate(-90 18 %d)'>%s</text>\n",
                 (y0 + y1) / 2, (y0 + y1) / 2, y_label.c_str());
}

std::FILE* begin_svg(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw io_error("cannot open for writing: " + path);
    std::fprintf(fp,
                 "<svg xmlns='http://www.w3.org/2000/svg' width='%d' height='%d' "
                 "viewBox='0 0 %d %d'>\n<rect width='%d' height='%d' fill='white'/>\n",
                 plot_w, plot_h, plot_w, plot_h, plot_w, plot_h);
    return fp;
}

}  // namespace

void write_heatmap_svg(const std::string& path, const HeatMapSpec& spec) {
    if (spec.x.empty() || spec.y.empty() || spec.value.size() != spec.y.size())
        throw std::invalid_argument("write_heatmap_svg: inconsistent grid");
    double vmin = spec.value[0][0], vmax = vmin;
    for (const auto& row : spec.value)
        for (double v : row) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    if (vmax == vmin) vmax = vmin + 1.0;

    std::FILE* fp = begin_svg(path);
    const Axis ax{spec.x.front(), spec.x.back()};
    const Axis ay{spec.y.front(), spec.y.back()};
    const int x0 = margin_left, x1 = plot_w - margin_right;
    const int y0 = plot_h - margin_bottom, y1 = margin_top;

    const double cell_w = static_cast<double>(x1 - x0) / spec.x.size();
    const double cell_h = static_cast<double>(y0 - y1) / spec.y.size();
    for (std::size_t r = 0; r < spec.y.size(); ++r)
        for (std::size_t c = 0; c < spec.x.size(); ++c) {
            int rgb[3];
            color_of((spec.value[r][c] - vmin) / (vmax - vmin), rgb);
            const double px = x0 + c * cell_w;
            const double py = y0 - (r + 1) * cell_h;
            std::fprintf(fp,
                         "<rect x='%.2f' y='%.2f' width='%.2f' height='%.2f' "
                         "fill='rgb(%d,%d,%d)'/>\n",
                         px, py, cell_w + 0.5, cell_h + 0.5, rgb[0], rgb[1], rgb[2]);
        }

    // color bar
    const int bar_x = x1 + 20, bar_w = 18;
    for (int i = 0; i < 100; ++i) {
        int rgb[3];
        color_of(i / 99.0, rgb);
        const double py = y0 - (i + 1) * (y0 - y1) / 100.0;
        std::fprintf(fp,
                     "<rect x='%d' y='%.2f' width='%d' height='%.2f' fill='rgb(%d,%d,%d)'/>\n",
                     bar_x, py, bar_w, (y0 - y1) / 100.0 + 0.5, rgb[0], rgb[1], rgb[2]);
    }
    std::fprintf(fp, "<text x='%d' y='%d' font-size='11'>%s</text>\n", bar_x - 4, y1 - 6,
                 tick_label(vmax).c_str());
    std::fprintf(fp, "<text x='%d' y='%d' font-size='11'>%s</text>\n", bar_x - 4, y0 + 14,
                 tick_label(vmin).c_str());

    draw_frame_and_ticks(fp, ax, ay, spec.title, spec.x_label, spec.y_label);
    std::fprintf(fp, "</svg>\n");
    std::fclose(fp);
}

void write_lineplot_svg(const std::string& path, const LinePlotSpec& spec) {
    if (spec.x.empty() || spec.series.empty())
        throw std::invalid_argument("write_lineplot_svg: empty plot");
    double vmin = spec.series[0].y[0], vmax = vmin;
    for (const auto& s : spec.series)
        for (double v : s.y) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    if (vmax == vmin) vmax = vmin + 1.0;
    const double pad = 0.05 * (vmax - vmin);

    std::FILE* fp = begin_svg(path);
    const Axis ax{spec.x.front(), spec.x.back()};
    const Axis ay{vmin - pad, vmax + pad};
    const int x0 = margin_left, x1 = plot_w - margin_right;
    const int y0 = plot_h - margin_bottom, y1 = margin_top;

    const char* palette[6] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    for (std::size_t si = 0; si < spec.series.size(); ++si) {
        const auto& s = spec.series[si];
        std::string pts;
        char buf[48];
        for (std::size_t i = 0; i < spec.x.size() && i < s.y.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", ax.scale(spec.x[i], x0, x1),
                          ay.scale(s.y[i], y0, y1));
            pts += buf;
        }
        std::fprintf(fp,
                     "<polyline points='%s' fill='none' stroke='%s' stroke-width='1.5'/>\n",
                     pts.c_str(), palette[si % 6]);
        std::fprintf(fp, "<text x='%d' y='%d' font-size='12' fill='%s'>%s</text>\n", x1 + 8,
                     y1 + 16 + 16 * static_cast<int>(si), palette[si % 6], s.label.c_str());
    }

    draw_frame_and_ticks(fp, ax, ay, spec.title, spec.x_label, spec.y_label);
    std::fprintf(fp, "</svg>\n");
    std::fclose(fp);
}

}  // namespace wqed::io
