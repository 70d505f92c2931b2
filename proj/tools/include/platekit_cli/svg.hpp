#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace platekit::cli {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;  // non-finite values break the line
  bool markers = false;   // draw points instead of a polyline
};

/// Axes, one polyline (or marker set) per series, title and axis labels.
std::string line_plot(const std::vector<PlotSeries>& series, const std::string& title, const std::string& x_label,
                      const std::string& y_label);

/// Row-major heatmap on a linear color scale clamped to [db_min, db_max].
/// Shadow cells are drawn in a fixed gray.
std::string heatmap(const std::vector<double>& values_db, const std::vector<bool>& shadow, std::size_t rows,
                    std::size_t cols, double db_min, double db_max, const std::string& title);

}  // namespace platekit::cli
