#include "hyptrace/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "hyptrace/error.hpp"
#include "hyptrace/json_io.hpp"
#include "hyptrace/svg.hpp"

namespace hyptrace::cli {

namespace {

using io::Json;

struct Options {
  double tol = kDefaultTol;
  bool pretty = false;
  bool degrees = false;
  bool disk = false;
  std::string input;
};

// Either a JSON document or raw SVG text.
struct Output {
  Json json;
  std::string text;
};

double angle_field(const Json& j, const char* key, const Options& opt) {
  const double v = io::number_field(j, key);
  return opt.degrees ? v * std::numbers::pi / 180.0 : v;
}

Output cmd_classify(const Json& j, const Options& opt) {
  return {io::to_json(classify(io::isometry_from_json(j), opt.tol)), {}};
}

Output cmd_compose(const Json& j, const Options& opt) {
  if (!j.is_object() || !j.contains("g") || !j.contains("h")) {
    throw io::InputError("compose expects {\"g\": ..., \"h\": ...}");
  }
  const Isometry product = compose(io::isometry_from_json(j["g"]), io::isometry_from_json(j["h"]));
  Json out = io::to_json(product);
  out["det"] = product.det();
  const Json cls = io::to_json(classify(product, opt.tol));
  for (const auto& [k, v] : cls.items()) out[k] = v;
  return {out, {}};
}

Output cmd_axis(const Json& j, const Options& opt) {
  return {io::to_json(axis(io::isometry_from_json(j), opt.tol)), {}};
}

Output cmd_predict(const Json& j, const Options& opt) {
  if (!j.is_object() || !j.contains("g") || !j.contains("h")) {
    throw io::InputError("predict expects {\"g\": ..., \"h\": ..., \"theta\": ...}");
  }
  const auto& g = j["g"];
  const auto& h = j["h"];
  return {io::to_json(predict_half_trace(io::translation_kind_from_json(g),
                                         io::number_field(g, "length"),
                                         io::translation_kind_from_json(h),
                                         io::number_field(h, "length"),
                                         angle_field(j, "theta", opt), opt.tol)),
          {}};
}

Output cmd_verify(const Json& j, const Options& opt) {
  if (!j.is_object() || !j.contains("g") || !j.contains("h")) {
    throw io::InputError("verify expects {\"g\": ..., \"h\": ...}");
  }
  return {io::to_json(verify_against_oracle(io::isometry_from_json(j["g"]),
                                            io::isometry_from_json(j["h"]), opt.tol)),
          {}};
}

Output cmd_smooth(const Json& j, const Options& opt) {
  if (!j.is_object() || !j.contains("alpha") || !j.contains("beta")) {
    throw io::InputError("smooth expects {\"alpha\": ..., \"beta\": ..., \"theta\": ...}");
  }
  return {io::to_json(smooth(io::curve_from_json(j["alpha"]), io::curve_from_json(j["beta"]),
                             angle_field(j, "theta", opt), opt.tol)),
          {}};
}

Output cmd_find_m(const Json& j, const Options& opt) {
  int m_cap = 1'000'000;
  if (j.is_object() && j.contains("m_cap")) m_cap = io::integer_field(j, "m_cap");
  if (m_cap < 1) throw io::InputError("m_cap must be at least 1");
  return {io::to_json(find_puncture_m(io::number_field(j, "l_alpha"),
                                      io::number_field(j, "l_beta"), angle_field(j, "theta", opt),
                                      opt.tol, m_cap)),
          {}};
}

Output cmd_bound(const Json& j, const Options& opt) {
  const double l_beta = io::number_field(j, "l_beta");
  const double theta = angle_field(j, "theta", opt);
  Json out = io::to_json(bound(l_beta, theta));
  out["not_simple"] = is_simple_excluded(l_beta, theta);
  return {out, {}};
}

Output cmd_plot(const Json& j, const Options& opt) {
  return {{}, svg::render(svg::plot_spec_from_json(j), opt.disk)};
}

Output cmd_plot_f(const Json& j, const Options&) {
  svg::Window w{-3.0, 3.0, 3.0};
  if (!j.is_object()) throw io::InputError("plot-f expects an object");
  if (j.contains("t_min")) w.x_min = io::number_field(j, "t_min");
  if (j.contains("t_max")) w.x_max = io::number_field(j, "t_max");
  if (j.contains("y_max")) w.y_max = io::number_field(j, "y_max");
  const int samples = j.contains("samples") ? io::integer_field(j, "samples") : 400;
  const double r = io::number_field(j, "r");
  if (r < 0.0) throw io::InputError("r must be nonnegative");
  return {{}, svg::render_f_plot(r, io::number_field(j, "s"), w, samples)};
}

using Handler = std::function<Output(const Json&, const Options&)>;

const std::vector<std::pair<std::string, std::pair<Handler, std::string>>>& commands() {
  static const std::vector<std::pair<std::string, std::pair<Handler, std::string>>> table{
      {"classify", {cmd_classify, "Classify an isometry {\"matrix\": [[a,b],[c,d]]}"}},
      {"compose", {cmd_compose, "Product of {\"g\", \"h\"} and its class"}},
      {"axis", {cmd_axis, "Oriented axis of a hyperbolic element or glide-reflection"}},
      {"predict", {cmd_predict, "Closed-form half-trace of gh from kinds, lengths and angle"}},
      {"verify", {cmd_verify, "Closed-form half-trace against the matrix product"}},
      {"smooth", {cmd_smooth, "Smooth a crossing of two closed geodesics"}},
      {"find-m", {cmd_find_m, "Odd powers m giving a puncture loop"}},
      {"bound", {cmd_bound, "Self-intersection lower bound"}},
      {"plot", {cmd_plot, "Render a JSON plot description as SVG"}},
      {"plot-f", {cmd_plot_f, "Render y = |r sinh t + s cosh t| as SVG"}},
  };
  return table;
}

void print_error(std::ostream& out, std::string_view code, const std::string& detail) {
  out << Json{{"error", code}, {"detail", detail}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Trace and length identities for hyperbolic isometries and glide-reflections",
               "hyptrace"};
  app.require_subcommand(1);
  app.add_option("--tol", opt.tol, "Classification tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", "Machine-readable JSON output (default)");
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");
  app.add_flag("--degrees", opt.degrees, "Read input angles in degrees");
  app.add_flag("--disk", opt.disk, "Poincare disk projection for plot");

  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, entry] : commands()) {
    CLI::App* sub = app.add_subcommand(name, entry.second);
    sub->fallthrough();
    sub->add_option("input", opt.input, "JSON input file (default: stdin)");
    handlers[sub] = entry.first;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    print_error(out, "UsageError", e.what());
    return kExitMalformedInput;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    Json input;
    if (opt.input.empty()) {
      input = Json::parse(in);
    } else {
      std::ifstream file(opt.input);
      if (!file) {
        print_error(out, "InputUnreadable", "cannot open " + opt.input);
        return kExitMalformedInput;
      }
      input = Json::parse(file);
    }
    const Output result = handlers.at(chosen)(input, opt);
    if (!result.text.empty()) {
      out << result.text;
    } else {
      out << (opt.pretty ? result.json.dump(2) : result.json.dump()) << '\n';
    }
    return kExitOk;
  } catch (const nlohmann::json::parse_error& e) {
    print_error(out, "MalformedJson", e.what());
    return kExitMalformedInput;
  } catch (const nlohmann::json::exception& e) {
    print_error(out, "InvalidInput", e.what());
    return kExitMalformedInput;
  } catch (const io::InputError& e) {
    print_error(out, "InvalidInput", e.what());
    return kExitMalformedInput;
  } catch (const Error& e) {
    print_error(out, to_string(e.code()), e.what());
    return kExitDomainError;
  }
}

}  // namespace hyptrace::cli
