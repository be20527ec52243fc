#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyptrace/geodesic.hpp"
#include "hyptrace/json_io.hpp"

namespace hyptrace::svg {

/// Visible part of the upper half-plane: [x_min, x_max] x [0, y_max].
struct Window {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_max = 2.0;
};

struct GeodesicItem {
  Geodesic line;
  std::string color = "black";
};

struct PointItem {
  HPoint at;
  std::string color = "black";
};

struct LabelItem {
  HPoint at;
  std::string text;
};

/// y = |r sinh x + s cosh x| sampled at `samples` abscissae across the window.
struct CurveItem {
  double r = 0.0;
  double s = 0.0;
  int samples = 200;
  std::string color = "black";
};

using Item = std::variant<GeodesicItem, PointItem, LabelItem, CurveItem>;

struct PlotSpec {
  Window window;
  std::vector<Item> items;
};

/// Throws io::InputError on schema violations and on an invalid window.
PlotSpec plot_spec_from_json(const io::Json& j);

/// Half-plane view of the spec, or the Poincare disk view through z -> (z - i)/(z + i).
std::string render(const PlotSpec& spec, bool disk = false);

/// y = |r sinh t + s cosh t| over [t_min, t_max] with the line y = 1 and a
/// marker at each crossing of it.
std::string render_f_plot(double r, double s, const Window& window, int samples = 400);

}  // namespace hyptrace::svg
