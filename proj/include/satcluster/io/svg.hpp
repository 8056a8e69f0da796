#pragma once

// Deterministic SVG plotting.
//
// Axis policy (fixed, so repeated runs produce byte-identical files):
//  - canvas 800x500 px, plot area inset by margins {left 70, right 20,
//    top 40, bottom 50};
//  - linear axes span [0, 1.1 x data max] (or the data min when negative,
//    symmetrically padded by 10%);
//  - log axes span the decades covering the data;
//  - ticks: 5 evenly spaced on linear axes, one per decade on log axes;
//  - coordinates rendered with two decimals, tick labels with %g;
//  - series colors assigned from a fixed palette in input order.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace satcluster {

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (x, y)
    bool scatter = false;                           // false: polyline
};

struct SvgPlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
};

namespace detail {

inline const char* svg_palette(std::size_t i) {
    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    return kColors[i % 10];
}

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string svg_tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

struct AxisRange {
    double lo = 0.0, hi = 1.0;
    bool log = false;
    double map(double v, double px_lo, double px_hi) const {
        const double t = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo))
                             : (v - lo) / (hi - lo);
        return px_lo + t * (px_hi - px_lo);
    }
};

inline AxisRange axis_range(double dmin, double dmax, bool log) {
    AxisRange r;
    r.log = log;
    if (log) {
        if (!(dmin > 0.0)) throw std::invalid_argument("svg: log axis requires positive data");
        r.lo = std::pow(10.0, std::floor(std::log10(dmin)));
        r.hi = std::pow(10.0, std::ceil(std::log10(dmax)));
        if (r.hi <= r.lo) r.hi = 10.0 * r.lo;
    } else {
        r.lo = dmin < 0.0 ? 1.1 * dmin : 0.0;
        r.hi = dmax > 0.0 ? 1.1 * dmax : (dmax < 0.0 ? 0.0 : 1.0);
        if (r.hi <= r.lo) r.hi = r.lo + 1.0;
    }
    return r;
}

inline std::vector<double> axis_ticks(const AxisRange& r) {
    std::vector<double> t;
    if (r.log) {
        for (double v = r.lo; v <= r.hi * 1.0000001; v *= 10.0) t.push_back(v);
    } else {
        for (int i = 0; i <= 5; ++i) t.push_back(r.lo + (r.hi - r.lo) * i / 5.0);
    }
    return t;
}

}  // namespace detail

/// Renders a line/scatter chart to an SVG document string.
inline std::string render_svg_plot(const std::vector<SvgSeries>& series,
                                   const SvgPlotOptions& opt) {
    if (series.empty()) throw std::invalid_argument("render_svg_plot: no series");
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    std::size_t n_points = 0;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
            ++n_points;
        }
    if (n_points == 0) throw std::invalid_argument("render_svg_plot: no data points");

    constexpr double kW = 800.0, kH = 500.0;
    constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 50.0;
    const double px0 = kLeft, px1 = kW - kRight;
    const double py0 = kH - kBottom, py1 = kTop;  // SVG y grows downward
    const auto xr = detail::axis_range(xmin, xmax, opt.log_x);
    const auto yr = detail::axis_range(ymin, ymax, opt.log_y);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
           "viewBox=\"0 0 800 500\">\n";
    out << "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    out << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">" << opt.title << "</text>\n";

    for (const double t : detail::axis_ticks(xr)) {
        const double px = xr.map(t, px0, px1);
        out << "<line x1=\"" << detail::svg_num(px) << "\" y1=\"" << detail::svg_num(py0)
            << "\" x2=\"" << detail::svg_num(px) << "\" y2=\"" << detail::svg_num(py1)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << detail::svg_num(px) << "\" y=\"" << detail::svg_num(py0 + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::svg_tick_label(t) << "</text>\n";
    }
    for (const double t : detail::axis_ticks(yr)) {
        const double py = yr.map(t, py0, py1);
        out << "<line x1=\"" << detail::svg_num(px0) << "\" y1=\"" << detail::svg_num(py)
            << "\" x2=\"" << detail::svg_num(px1) << "\" y2=\"" << detail::svg_num(py)
            << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << detail::svg_num(px0 - 6.0) << "\" y=\"" << detail::svg_num(py + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << detail::svg_tick_label(t) << "</text>\n";
    }
    out << "<rect x=\"" << detail::svg_num(px0) << "\" y=\"" << detail::svg_num(py1)
        << "\" width=\"" << detail::svg_num(px1 - px0) << "\" height=\""
        << detail::svg_num(py0 - py1) << "\" fill=\"none\" stroke=\"black\"/>\n";
    out << "<text x=\"" << detail::svg_num((px0 + px1) / 2.0) << "\" y=\"492\" "
           "text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << opt.x_label
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << detail::svg_num((py0 + py1) / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
           "transform=\"rotate(-90 16 " << detail::svg_num((py0 + py1) / 2.0) << ")\">"
        << opt.y_label << "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto& s = series[i];
        const char* color = detail::svg_palette(i);
        if (s.scatter) {
            for (const auto& [x, y] : s.points)
                out << "<circle cx=\"" << detail::svg_num(xr.map(x, px0, px1)) << "\" cy=\""
                    << detail::svg_num(yr.map(y, py0, py1)) << "\" r=\"2.5\" fill=\"" << color
                    << "\"/>\n";
        } else {
            out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" "
                   "points=\"";
            for (const auto& [x, y] : s.points)
                out << detail::svg_num(xr.map(x, px0, px1)) << ','
                    << detail::svg_num(yr.map(y, py0, py1)) << ' ';
            out << "\"/>\n";
        }
        // legend entry
        const double ly = py1 + 16.0 + 16.0 * static_cast<double>(i);
        out << "<rect x=\"" << detail::svg_num(px1 - 150.0) << "\" y=\"" << detail::svg_num(ly - 9.0)
            << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        out << "<text x=\"" << detail::svg_num(px1 - 134.0) << "\" y=\"" << detail::svg_num(ly + 1.0)
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace satcluster
