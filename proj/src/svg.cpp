#include "hyptrace/svg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "hyptrace/smoothing.hpp"

namespace hyptrace::svg {

namespace {

constexpr double kWidth = 600.0;
constexpr double kDiskRadius = 280.0;

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string color_of(const io::Json& j) {
  if (!j.contains("color")) return "black";
  if (!j["color"].is_string()) throw io::InputError("color must be a string");
  const auto c = j["color"].get<std::string>();
  for (char ch : c) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '#') {
      throw io::InputError("color must be a name or #hex value");
    }
  }
  return c;
}

void check_window(const Window& w) {
  if (!(w.x_min < w.x_max) || !(w.y_max > 0.0)) {
    throw io::InputError("window needs x_min < x_max and y_max > 0");
  }
}

// Maps model coordinates to canvas coordinates, refusing non-finite values.
class Canvas {
 public:
  virtual ~Canvas() = default;
  virtual std::pair<double, double> map(double x, double y) const = 0;
  double width() const { return width_; }
  double height() const { return height_; }

  std::string coord(double x, double y) const {
    auto [sx, sy] = map(x, y);
    if (!std::isfinite(sx) || !std::isfinite(sy)) throw std::logic_error("non-finite coordinate");
    return fmt::format("{:.3f},{:.3f}", sx, sy);
  }

 protected:
  double width_ = kWidth;
  double height_ = kWidth;
};

class HalfPlaneCanvas : public Canvas {
 public:
  explicit HalfPlaneCanvas(const Window& w) : window_(w) {
    scale_ = kWidth / (w.x_max - w.x_min);
    height_ = w.y_max * scale_;
  }
  std::pair<double, double> map(double x, double y) const override {
    // Clamp far-away points just outside the view so paths stay finite.
    const double margin = 2.0 * (window_.x_max - window_.x_min + window_.y_max);
    x = std::clamp(x, window_.x_min - margin, window_.x_max + margin);
    y = std::clamp(y, -margin, window_.y_max + margin);
    return {(x - window_.x_min) * scale_, height_ - y * scale_};
  }
  double scale() const { return scale_; }
  const Window& window() const { return window_; }

 private:
  Window window_;
  double scale_ = 1.0;
};

class DiskCanvas : public Canvas {
 public:
  std::pair<double, double> map(double x, double y) const override {
    const std::complex<double> z{x, y};
    const std::complex<double> w = (z - std::complex<double>(0, 1)) / (z + std::complex<double>(0, 1));
    return {kWidth / 2.0 + kDiskRadius * w.real(), kWidth / 2.0 - kDiskRadius * w.imag()};
  }
  std::string boundary(const BoundaryPoint& p) const {
    if (p.is_infinite()) return fmt::format("{:.3f},{:.3f}", kWidth / 2.0 + kDiskRadius, kWidth / 2.0);
    return coord(p.value(), 0.0);
  }
};

std::string header(double width, double height) {
  std::string out = fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" "
      "height=\"{:.0f}\" viewBox=\"0 0 {:.3f} {:.3f}\">\n",
      std::ceil(width), std::ceil(height), width, height);
  out +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" "
      "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
      "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker>\n";
  out += fmt::format(
      "<clipPath id=\"view\"><rect x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\"/>"
      "</clipPath></defs>\n",
      width, height);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"white\"/>\n",
                     width, height);
  return out;
}

std::string curve_path(const CurveItem& c, const HalfPlaneCanvas& canvas) {
  const auto& w = canvas.window();
  std::string d;
  for (int k = 0; k < c.samples; ++k) {
    const double t = w.x_min + (w.x_max - w.x_min) * k / (c.samples - 1);
    const double y = std::abs(c.r * std::sinh(t) + c.s * std::cosh(t));
    d += (k == 0 ? "M " : " L ") + canvas.coord(t, std::isfinite(y) ? y : 1e300);
  }
  return d;
}

std::string half_plane_item(const Item& item, const HalfPlaneCanvas& canvas) {
  if (const auto* g = std::get_if<GeodesicItem>(&item)) {
    const auto& line = g->line;
    std::string d;
    if (line.is_vertical()) {
      const double x = line.to().is_infinite() ? line.from().value() : line.to().value();
      const double top = canvas.window().y_max * 1.05;
      d = line.to().is_infinite() ? "M " + canvas.coord(x, 0.0) + " L " + canvas.coord(x, top)
                                  : "M " + canvas.coord(x, top) + " L " + canvas.coord(x, 0.0);
    } else {
      const double x1 = line.from().value(), x2 = line.to().value();
      const double radius = std::abs(x2 - x1) / 2.0 * canvas.scale();
      // Over the top, left to right is clockwise on screen.
      d = fmt::format("M {} A {:.3f} {:.3f} 0 0 {} {}", canvas.coord(x1, 0.0), radius, radius,
                      x2 > x1 ? 1 : 0, canvas.coord(x2, 0.0));
    }
    return fmt::format(
        "<path class=\"geodesic\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
        "marker-end=\"url(#arrow)\"/>\n",
        d, g->color);
  }
  if (const auto* p = std::get_if<PointItem>(&item)) {
    auto [sx, sy] = canvas.map(p->at.x, p->at.y);
    return fmt::format("<circle class=\"point\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"{}\"/>\n",
                       sx, sy, p->color);
  }
  if (const auto* l = std::get_if<LabelItem>(&item)) {
    auto [sx, sy] = canvas.map(l->at.x, l->at.y);
    return fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"14\">{}</text>\n", sx, sy,
                       escape(l->text));
  }
  const auto& c = std::get<CurveItem>(item);
  return fmt::format(
      "<path class=\"curve\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"/>\n",
      curve_path(c, canvas), c.color);
}

std::string disk_item(const Item& item, const DiskCanvas& canvas) {
  if (const auto* g = std::get_if<GeodesicItem>(&item)) {
    // Sampled along the unit-speed parameterization, capped by the ideal endpoints.
    const Isometry m = frame(g->line);
    std::string d = "M " + canvas.boundary(g->line.from());
    for (int k = -60; k <= 60; ++k) {
      const HPoint p = apply(m, HPoint{0.0, std::exp(k * 0.25)});
      d += " L " + canvas.coord(p.x, p.y);
    }
    d += " L " + canvas.boundary(g->line.to());
    return fmt::format(
        "<path class=\"geodesic\" d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
        "marker-end=\"url(#arrow)\"/>\n",
        d, g->color);
  }
  if (const auto* p = std::get_if<PointItem>(&item)) {
    auto [sx, sy] = canvas.map(p->at.x, p->at.y);
    return fmt::format("<circle class=\"point\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"3\" fill=\"{}\"/>\n",
                       sx, sy, p->color);
  }
  if (const auto* l = std::get_if<LabelItem>(&item)) {
    auto [sx, sy] = canvas.map(l->at.x, l->at.y);
    return fmt::format("<text x=\"{:.3f}\" y=\"{:.3f}\" font-size=\"14\">{}</text>\n", sx, sy,
                       escape(l->text));
  }
  throw io::InputError("curve items cannot be drawn in the disk view");
}

}  // namespace

PlotSpec plot_spec_from_json(const io::Json& j) {
  PlotSpec spec;
  if (!j.is_object()) throw io::InputError("plot input must be an object");
  if (j.contains("window")) {
    const auto& w = j["window"];
    spec.window = {io::number_field(w, "x_min"), io::number_field(w, "x_max"),
                   io::number_field(w, "y_max")};
  }
  check_window(spec.window);
  if (!j.contains("items")) return spec;
  if (!j["items"].is_array()) throw io::InputError("items must be an array");

  for (const auto& it : j["items"]) {
    if (!it.is_object() || !it.contains("type") || !it["type"].is_string()) {
      throw io::InputError("each item needs a string \"type\"");
    }
    const auto type = it["type"].get<std::string>();
    if (type == "geodesic") {
      spec.items.emplace_back(GeodesicItem{io::geodesic_from_json(it), color_of(it)});
    } else if (type == "point") {
      spec.items.emplace_back(PointItem{io::hpoint_from_json(it), color_of(it)});
    } else if (type == "label") {
      if (!it.contains("text") || !it["text"].is_string()) {
        throw io::InputError("label needs a string \"text\"");
      }
      spec.items.emplace_back(LabelItem{io::hpoint_from_json(it), it["text"].get<std::string>()});
    } else if (type == "curve") {
      CurveItem c{io::number_field(it, "r"), io::number_field(it, "s"), 200, color_of(it)};
      if (it.contains("samples")) c.samples = io::integer_field(it, "samples");
      if (c.samples < 2) throw io::InputError("samples must be at least 2");
      spec.items.emplace_back(c);
    } else {
      throw io::InputError("unknown item type \"" + type + "\"");
    }
  }
  return spec;
}

std::string render(const PlotSpec& spec, bool disk) {
  check_window(spec.window);
  std::string body;
  std::string out;
  if (disk) {
    DiskCanvas canvas;
    for (const auto& item : spec.items) body += disk_item(item, canvas);
    out = header(canvas.width(), canvas.height());
    out += fmt::format(
        "<circle class=\"boundary\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"none\" "
        "stroke=\"gray\"/>\n",
        kWidth / 2.0, kWidth / 2.0, kDiskRadius);
  } else {
    HalfPlaneCanvas canvas(spec.window);
    for (const auto& item : spec.items) body += half_plane_item(item, canvas);
    out = header(canvas.width(), canvas.height());
    out += fmt::format(
        "<line class=\"boundary\" x1=\"0\" y1=\"{0:.3f}\" x2=\"{1:.3f}\" y2=\"{0:.3f}\" "
        "stroke=\"gray\"/>\n",
        canvas.height(), canvas.width());
  }
  out += "<g clip-path=\"url(#view)\">\n" + body + "</g>\n</svg>\n";
  return out;
}

std::string render_f_plot(double r, double s, const Window& window, int samples) {
  check_window(window);
  if (samples < 2) throw io::InputError("samples must be at least 2");
  HalfPlaneCanvas canvas(window);

  const double unit_y = canvas.map(0.0, 1.0).second;
  std::string body = fmt::format(
      "<line class=\"unit-level\" x1=\"0\" y1=\"{0:.3f}\" x2=\"{1:.3f}\" y2=\"{0:.3f}\" "
      "stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
      unit_y, canvas.width());
  if (window.x_min <= 0.0 && window.x_max >= 0.0) {
    auto [sx, sy] = canvas.map(0.0, 0.0);
    body += fmt::format(
        "<line class=\"axis\" x1=\"{0:.3f}\" y1=\"{1:.3f}\" x2=\"{0:.3f}\" y2=\"0\" "
        "stroke=\"gray\"/>\n",
        sx, sy);
  }
  body += half_plane_item(CurveItem{r, s, samples, "black"}, canvas);
  for (double t : unit_level_crossings(r, s)) {
    if (t < window.x_min || t > window.x_max) continue;
    auto [sx, sy] = canvas.map(t, 1.0);
    body += fmt::format(
        "<circle class=\"crossing\" cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"4\" fill=\"red\"/>\n", sx, sy);
  }
  body += fmt::format("<text x=\"8\" y=\"20\" font-size=\"14\">case ({}): r = {:.6g}, s = {:.6g}</text>\n",
                      to_string(classify_f_case(r, s)), r, s);

  std::string out = header(canvas.width(), canvas.height());
  out += fmt::format(
      "<line class=\"boundary\" x1=\"0\" y1=\"{0:.3f}\" x2=\"{1:.3f}\" y2=\"{0:.3f}\" "
      "stroke=\"gray\"/>\n",
      canvas.height(), canvas.width());
  out += "<g clip-path=\"url(#view)\">\n" + body + "</g>\n</svg>\n";
  return out;
}

}  // namespace hyptrace::svg
