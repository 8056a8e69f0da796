#pragma once

// CSV-to-SVG dispatch for the figure artifacts this toolkit emits. The plot
// recipe is chosen by CSV header:
//   distance_m,scheme,bandwidth_bps,regime  -> log-log lines, one per scheme
//   t_frac,sat_id,role,x_m,y_m             -> scatter, one series per role
//   t_s,neighbor_id,kind,distance_m        -> lines, one per neighbor
//   cumulative_mass_t,price_usd_per_kg     -> log-log single line

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "satcluster/io/csv.hpp"
#include "satcluster/io/svg.hpp"

namespace satcluster {

namespace detail {

inline bool header_is(const CsvTable& t, const std::vector<std::string>& cols) {
    return t.header == cols;
}

/// Groups (x, y) rows into one series per value of a key column, in first-seen
/// order so the output is deterministic.
inline std::vector<SvgSeries> grouped_series(const CsvTable& t, std::size_t key_col,
                                             std::size_t x_col, std::size_t y_col, bool scatter) {
    std::vector<SvgSeries> series;
    std::map<std::string, std::size_t> index;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const std::string& key = t.rows[r][key_col];
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.insert({key, series.size()}).first;
            series.push_back({key, {}, scatter});
        }
        series[it->second].points.push_back({csv_double(t, r, x_col), csv_double(t, r, y_col)});
    }
    return series;
}

}  // namespace detail

/// Renders the SVG for a toolkit CSV; throws on unknown layouts or empty data.
inline std::string render_plot_for_csv(const CsvTable& table, const std::string& name) {
    if (table.rows.empty()) throw std::runtime_error(name + ": no data rows to plot");
    SvgPlotOptions opt;
    if (detail::header_is(table, {"distance_m", "scheme", "bandwidth_bps", "regime"})) {
        opt = {"Photon-limited bandwidth vs distance", "distance [m]", "bandwidth [bit/s]", true,
               true};
        return render_svg_plot(detail::grouped_series(table, 1, 0, 2, false), opt);
    }
    if (detail::header_is(table, {"t_frac", "sat_id", "role", "x_m", "y_m"})) {
        opt = {"Cluster snapshots over one orbit", "in-track [m]", "radial [m]", false, false};
        // plotted as (y, x): in-track horizontal, radial vertical
        return render_svg_plot(detail::grouped_series(table, 2, 4, 3, true), opt);
    }
    if (detail::header_is(table, {"t_s", "neighbor_id", "kind", "distance_m"})) {
        opt = {"Neighbor distances over one orbit", "time [s]", "distance [m]", false, false};
        return render_svg_plot(detail::grouped_series(table, 1, 0, 3, false), opt);
    }
    if (detail::header_is(table, {"cumulative_mass_t", "price_usd_per_kg"})) {
        opt = {"Launch price vs cumulative mass", "cumulative mass [t]", "price [USD/kg]", true,
               true};
        SvgSeries ser{"price", {}, false};
        for (std::size_t r = 0; r < table.rows.size(); ++r)
            ser.points.push_back({csv_double(table, r, 0), csv_double(table, r, 1)});
        return render_svg_plot({ser}, opt);
    }
    throw std::runtime_error(name + ": no plot recipe for this column layout");
}

/// True for CSV layouts that have a plot recipe.
inline bool csv_is_plottable(const CsvTable& table) {
    return detail::header_is(table, {"distance_m", "scheme", "bandwidth_bps", "regime"}) ||
           detail::header_is(table, {"t_frac", "sat_id", "role", "x_m", "y_m"}) ||
           detail::header_is(table, {"t_s", "neighbor_id", "kind", "distance_m"}) ||
           detail::header_is(table, {"cumulative_mass_t", "price_usd_per_kg"});
}

/// Reads a CSV and writes its SVG next to it (or to svg_path when given).
/// Returns the SVG path.
inline std::filesystem::path emit_plot(const std::filesystem::path& csv_path,
                                       std::filesystem::path svg_path = {}) {
    const CsvTable table = read_csv(csv_path);
    const std::string svg = render_plot_for_csv(table, csv_path.filename().string());
    if (svg_path.empty()) {
        svg_path = csv_path;
        svg_path.replace_extension(".svg");
    }
    write_file_atomic(svg_path, svg);
    return svg_path;
}

}  // namespace satcluster
