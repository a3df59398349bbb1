#include "socgrad/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace socgrad::svg {

namespace {

constexpr double kMarginLeft = 58.0;
constexpr double kMarginRight = 16.0;
constexpr double kMarginTop = 34.0;
constexpr double kMarginBottom = 46.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

/// Largest of {1, 2, 5} * 10^k not exceeding the raw spacing, so roughly
/// `target` ticks fit in the range.
double nice_step(double range, int target) {
  const double raw = range / static_cast<double>(target);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double ratio = raw / mag;
  if (ratio >= 5.0) return 5.0 * mag;
  if (ratio >= 2.0) return 2.0 * mag;
  return mag;
}

}  // namespace

Plot::Plot(double width, double height, std::string title)
    : width_(width), height_(height), title_(std::move(title)) {
  if (!(width_ > 100.0) || !(height_ > 100.0)) {
    throw std::invalid_argument("svg: plot must be at least 100x100");
  }
}

double Plot::px(double x) const {
  return kMarginLeft +
         (x - x_min_) / (x_max_ - x_min_) * (width_ - kMarginLeft - kMarginRight);
}

double Plot::py(double y) const {
  return height_ - kMarginBottom -
         (y - y_min_) / (y_max_ - y_min_) * (height_ - kMarginTop - kMarginBottom);
}

void Plot::require_axes(const char* op) const {
  if (!has_axes_) {
    throw std::logic_error(std::string("svg: set_axes must precede ") + op);
  }
}

void Plot::set_axes(double x_min, double x_max, double y_min, double y_max,
                    const std::string& x_label, const std::string& y_label) {
  if (!(x_min < x_max) || !(y_min < y_max) || !std::isfinite(x_min) ||
      !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max)) {
    throw std::invalid_argument("svg: axis bounds must be finite with min < max");
  }
  x_min_ = x_min;
  x_max_ = x_max;
  y_min_ = y_min;
  y_max_ = y_max;
  has_axes_ = true;

  std::string& out = axes_markup_;
  out.clear();
  const double left = kMarginLeft;
  const double right = width_ - kMarginRight;
  const double top = kMarginTop;
  const double bottom = height_ - kMarginBottom;

  const double x_step = nice_step(x_max_ - x_min_, 6);
  for (double i = std::ceil(x_min_ / x_step); i * x_step <= x_max_ + 1e-12 * x_step;
       i += 1.0) {
    const double v = i * x_step;
    const double gx = px(v);
    out += "<line x1=\"" + num(gx) + "\" y1=\"" + num(top) + "\" x2=\"" + num(gx) +
           "\" y2=\"" + num(bottom) + "\" stroke=\"#e4e4e4\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(gx) + "\" y=\"" + num(bottom + 16.0) +
           "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#444444\">" +
           escape(tick_label(v)) + "</text>\n";
  }
  const double y_step = nice_step(y_max_ - y_min_, 6);
  for (double i = std::ceil(y_min_ / y_step); i * y_step <= y_max_ + 1e-12 * y_step;
       i += 1.0) {
    const double v = i * y_step;
    const double gy = py(v);
    out += "<line x1=\"" + num(left) + "\" y1=\"" + num(gy) + "\" x2=\"" + num(right) +
           "\" y2=\"" + num(gy) + "\" stroke=\"#e4e4e4\" stroke-width=\"1\"/>\n";
    out += "<text x=\"" + num(left - 6.0) + "\" y=\"" + num(gy + 3.5) +
           "\" font-size=\"10\" text-anchor=\"end\" fill=\"#444444\">" +
           escape(tick_label(v)) + "</text>\n";
  }
  out += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" +
         num(right - left) + "\" height=\"" + num(bottom - top) +
         "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  out += "<text x=\"" + num(0.5 * (left + right)) + "\" y=\"" +
         num(height_ - 10.0) +
         "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#222222\">" +
         escape(x_label) + "</text>\n";
  out += "<text x=\"14\" y=\"" + num(0.5 * (top + bottom)) +
         "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#222222\" transform=\"rotate(-90 14 " +
         num(0.5 * (top + bottom)) + ")\">" + escape(y_label) + "</text>\n";
}

void Plot::polyline(const std::vector<Eigen::Vector2d>& points,
                    const std::string& color, double stroke_width, bool dashed) {
  require_axes("polyline");
  if (points.size() < 2) {
    throw std::invalid_argument("svg: polyline needs at least two points");
  }
  std::string path = "<polyline points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) path += ' ';
    path += num(px(points[i].x())) + "," + num(py(points[i].y()));
  }
  path += "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"" +
          num(stroke_width) + "\"";
  if (dashed) path += " stroke-dasharray=\"6 4\"";
  path += "/>\n";
  body_markup_ += path;
}

void Plot::markers(const std::vector<Eigen::Vector2d>& points,
                   const std::string& color, double radius) {
  require_axes("markers");
  for (const auto& p : points) {
    body_markup_ += "<circle cx=\"" + num(px(p.x())) + "\" cy=\"" +
                    num(py(p.y())) + "\" r=\"" + num(radius) + "\" fill=\"" +
                    color + "\"/>\n";
  }
}

void Plot::arrow(const Eigen::Vector2d& from, const Eigen::Vector2d& to,
                 const std::string& color, double stroke_width) {
  require_axes("arrow");
  const double x1 = px(from.x()), y1 = py(from.y());
  const double x2 = px(to.x()), y2 = py(to.y());
  body_markup_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
                  num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + color +
                  "\" stroke-width=\"" + num(stroke_width) + "\"/>\n";
  const double dx = x2 - x1, dy = y2 - y1;
  const double len = std::hypot(dx, dy);
  if (len < 1e-9) {
    return;  // zero displacement, draw the shaft (a dot-sized line) only
  }
  const double ux = dx / len, uy = dy / len;
  const double head = 5.0;
  const double bx = x2 - head * ux, by = y2 - head * uy;
  const double pxp = -uy * 0.45 * head, pyp = ux * 0.45 * head;
  body_markup_ += "<polygon points=\"" + num(x2) + "," + num(y2) + " " +
                  num(bx + pxp) + "," + num(by + pyp) + " " + num(bx - pxp) +
                  "," + num(by - pyp) + "\" fill=\"" + color + "\"/>\n";
}

void Plot::band(const std::vector<double>& xs, const std::vector<double>& lows,
                const std::vector<double>& highs, const std::string& color,
                double opacity) {
  require_axes("band");
  if (xs.size() < 2 || xs.size() != lows.size() || xs.size() != highs.size()) {
    throw std::invalid_argument("svg: band needs matching xs/lows/highs, length >= 2");
  }
  std::string path = "<polygon points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    path += num(px(xs[i])) + "," + num(py(highs[i])) + " ";
  }
  for (std::size_t i = xs.size(); i-- > 0;) {
    path += num(px(xs[i])) + "," + num(py(lows[i]));
    if (i > 0) path += ' ';
  }
  path += "\" fill=\"" + color + "\" fill-opacity=\"" + num(opacity) +
          "\" stroke=\"none\"/>\n";
  body_markup_ += path;
}

void Plot::legend(const std::vector<std::pair<std::string, std::string>>& entries) {
  require_axes("legend");
  if (entries.empty()) {
    return;
  }
  std::size_t longest = 0;
  for (const auto& [label, color] : entries) {
    longest = std::max(longest, label.size());
  }
  const double box_w = 34.0 + 6.3 * static_cast<double>(longest);
  const double box_h = 8.0 + 16.0 * static_cast<double>(entries.size());
  const double x0 = width_ - kMarginRight - box_w - 6.0;
  const double y0 = kMarginTop + 6.0;
  body_markup_ += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" +
                  num(box_w) + "\" height=\"" + num(box_h) +
                  "\" fill=\"#ffffff\" fill-opacity=\"0.85\" stroke=\"#bbbbbb\"/>\n";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const double ly = y0 + 14.0 + 16.0 * static_cast<double>(i);
    body_markup_ += "<line x1=\"" + num(x0 + 6.0) + "\" y1=\"" + num(ly - 3.5) +
                    "\" x2=\"" + num(x0 + 24.0) + "\" y2=\"" + num(ly - 3.5) +
                    "\" stroke=\"" + entries[i].second +
                    "\" stroke-width=\"2.5\"/>\n";
    body_markup_ += "<text x=\"" + num(x0 + 29.0) + "\" y=\"" + num(ly) +
                    "\" font-size=\"11\" fill=\"#222222\">" +
                    escape(entries[i].first) + "</text>\n";
  }
}

void Plot::write(std::ostream& out) const {
  require_axes("write");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_)
      << "\" height=\"" << num(height_) << "\" viewBox=\"0 0 " << num(width_)
      << " " << num(height_) << "\" font-family=\"sans-serif\">\n";
  out << "<rect width=\"" << num(width_) << "\" height=\"" << num(height_)
      << "\" fill=\"#ffffff\"/>\n";
  out << axes_markup_;
  out << body_markup_;
  out << "<text x=\"" << num(0.5 * width_)
      << "\" y=\"22\" font-size=\"13\" text-anchor=\"middle\" fill=\"#111111\">"
      << escape(title_) << "</text>\n";
  out << "</svg>\n";
}

void Plot::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("svg: cannot open '" + path + "' for writing");
  }
  write(out);
  if (!out.good()) {
    throw std::runtime_error("svg: write to '" + path + "' failed");
  }
}

}  // namespace socgrad::svg
