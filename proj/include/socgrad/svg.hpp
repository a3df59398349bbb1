#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace socgrad::svg {

/// Minimal static plot writer: one cartesian panel with axes, tick labels,
/// and a handful of element types, emitted as a standalone SVG document.
/// Elements are drawn in insertion order on top of the axes. Output is a
/// pure function of the calls made, so plots from identical runs are
/// byte-identical.
class Plot {
 public:
  Plot(double width, double height, std::string title);

  /// Fix the data rectangle and axis labels; call once before drawing.
  /// Bounds must be finite with min < max on both axes.
  void set_axes(double x_min, double x_max, double y_min, double y_max,
                const std::string& x_label, const std::string& y_label);

  void polyline(const std::vector<Eigen::Vector2d>& points,
                const std::string& color, double stroke_width,
                bool dashed = false);
  void markers(const std::vector<Eigen::Vector2d>& points,
               const std::string& color, double radius);
  void arrow(const Eigen::Vector2d& from, const Eigen::Vector2d& to,
             const std::string& color, double stroke_width);

  /// Filled region between two curves sharing the same x grid.
  void band(const std::vector<double>& xs, const std::vector<double>& lows,
            const std::vector<double>& highs, const std::string& color,
            double opacity);

  /// Color-swatch legend in the top-right corner of the panel.
  void legend(const std::vector<std::pair<std::string, std::string>>& entries);

  void write(std::ostream& out) const;
  void write_file(const std::string& path) const;

 private:
  double px(double x) const;
  double py(double y) const;
  void require_axes(const char* op) const;

  double width_;
  double height_;
  std::string title_;
  bool has_axes_ = false;
  double x_min_ = 0.0, x_max_ = 1.0, y_min_ = 0.0, y_max_ = 1.0;
  std::string axes_markup_;
  std::string body_markup_;
};

}  // namespace socgrad::svg
