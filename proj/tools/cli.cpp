#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "celestial/celestial.hpp"

namespace celestial::cli {
namespace {

using nlohmann::json;

// All numeric output carries 12 significant digits.
std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round12(double v) {
  if (!std::isfinite(v)) return v;
  // "+ 0.0" folds negative zero so mirrored results print identically.
  return std::strtod(fmt12(v).c_str(), nullptr) + 0.0;
}

json complex_json(Complex z) { return json::array({round12(z.real()), round12(z.imag())}); }

json matrix_json(const Matrix3& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (double v : row) r.push_back(round12(v));
    rows.push_back(r);
  }
  return rows;
}

Complex parse_complex(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(std::string(what) + ": expected a number or [re, im]");
}

json read_json(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return json::parse(in);
  std::ifstream file(path);
  if (!file) throw Error("cannot open '" + path + "'");
  return json::parse(file);
}

Matrix4 parse_matrix(const json& j) {
  if (!j.is_object() || !j.contains("m")) throw Error("matrix JSON must be an object with key \"m\"");
  const json& m = j.at("m");
  if (!m.is_array() || m.size() != 4) throw Error("\"m\" must hold 4 rows");
  Matrix4 out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!m[i].is_array() || m[i].size() != 4) throw Error("each row of \"m\" must hold 4 numbers");
    for (std::size_t k = 0; k < 4; ++k) {
      if (!m[i][k].is_number()) throw Error("matrix entries must be numbers");
      out[i][k] = m[i][k].get<double>();
    }
  }
  return out;
}

void write_output(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write '" + path + "'");
  file << bytes;
  if (!file) throw Error("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------

struct MatrixArgs {
  std::string input;
  double tol = kDefaultLorentzTol;
};

void add_matrix_options(CLI::App* cmd, MatrixArgs& args) {
  cmd->add_option("--input,-i", args.input, "Matrix JSON {\"m\": [[...], ...]} (default: stdin)");
  cmd->add_option("--tol", args.tol, "Validation tolerance (max-norm)")->check(CLI::PositiveNumber);
}

void run_classify(const MatrixArgs& args, std::istream& in, std::ostream& out) {
  const LorentzMatrix lambda = validate_lorentz(parse_matrix(read_json(args.input, in)), args.tol);
  json j;
  j["component"] = std::string(to_string(classify_component(lambda)));
  j["residual"] = round12(lambda.residual());
  out << j.dump() << '\n';
}

void run_decompose(const MatrixArgs& args, std::istream& in, std::ostream& out) {
  const LorentzMatrix lambda = validate_lorentz(parse_matrix(read_json(args.input, in)), args.tol);
  const StandardDecomposition d = standard_decompose(lambda);
  json j;
  j["r1"] = matrix_json(d.r1);
  j["chi"] = round12(d.chi.chi);
  j["r2"] = matrix_json(d.r2);
  out << j.dump() << '\n';
}

void run_lift(const MatrixArgs& args, std::istream& in, std::ostream& out) {
  const LorentzMatrix lambda = validate_lorentz(parse_matrix(read_json(args.input, in)), args.tol);
  const SL2CElement s = lift_lorentz_to_sl2c(lambda);
  json j;
  j["a"] = complex_json(s.a());
  j["b"] = complex_json(s.b());
  j["c"] = complex_json(s.c());
  j["d"] = complex_json(s.d());
  out << j.dump() << '\n';
}

void run_mobius(const std::string& input, std::istream& in, std::ostream& out) {
  const json j = read_json(input, in);
  if (!j.is_object()) throw Error("mobius input must be a JSON object");
  const Complex a = parse_complex(j.at("a"), "a");
  const Complex b = parse_complex(j.at("b"), "b");
  const Complex c = parse_complex(j.at("c"), "c");
  const Complex d = parse_complex(j.at("d"), "d");
  // Any invertible matrix defines the map; normalize it into SL(2,C).
  const Complex det = a * d - b * c;
  if (std::abs(det) == 0.0 || !std::isfinite(std::abs(det))) throw Error("mobius matrix must be invertible");
  const Complex k = 1.0 / std::sqrt(det);
  const MoebiusTransform t(SL2CElement(k * a, k * b, k * c, k * d));

  const json& points = j.contains("points") ? j.at("points") : json::array();
  if (!points.is_array()) throw Error("\"points\" must be an array");
  json result = json::array();
  for (const json& p : points) {
    const SpherePoint q = (p.is_string() && p.get<std::string>() == "inf") ? SpherePoint::infinity()
                                                                           : SpherePoint::from_complex(parse_complex(p, "point"));
    const SpherePoint image = moebius_apply(t, q);
    if (image.is_infinity()) result.push_back("inf");
    else result.push_back(complex_json(image.value()));
  }
  json o;
  o["points"] = result;
  out << o.dump() << '\n';
}

struct AberrateArgs {
  double chi = 0.0;
  double theta_deg = 0.0;
  bool json_out = false;
};

void run_aberrate(const AberrateArgs& args, std::ostream& out) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  if (!(args.theta_deg >= 0.0 && args.theta_deg <= 180.0)) throw DomainError("--theta-deg must lie in [0, 180]");
  const double theta = args.theta_deg == 180.0 ? std::numbers::pi : args.theta_deg * kDeg;
  const double theta_prime_deg = aberrate(Rapidity{args.chi}, theta) / kDeg;
  const double factor = doppler(Rapidity{args.chi}, theta);
  if (args.json_out) {
    json j;
    j["theta_prime_deg"] = round12(theta_prime_deg);
    j["doppler"] = round12(factor);
    out << j.dump() << '\n';
  } else {
    out << fmt12(theta_prime_deg) << '\n' << fmt12(factor) << '\n';
  }
}

struct RenderArgs {
  double chi = 0.0;
  std::string input;
  std::string out;
  std::string before_out;
  std::string format;
  std::string projection = "stereographic";
  std::string hemisphere = "north";
  int width = 512;
  int height = 512;
  bool json_out = false;
};

ImageFormat resolve_format(const RenderArgs& args) {
  if (args.format == "svg") return ImageFormat::Svg;
  if (args.format == "ppm") return ImageFormat::Ppm;
  // No explicit format: infer from the output extension, SVG otherwise.
  if (args.out.size() >= 4 && args.out.compare(args.out.size() - 4, 4, ".ppm") == 0) return ImageFormat::Ppm;
  return ImageFormat::Svg;
}

void run_render(const RenderArgs& args, std::ostream& out, std::ostream& err) {
  const std::vector<StarRecord> stars = load_catalog(std::filesystem::path(args.input));
  const std::vector<TransformedStar> transformed = transform_catalog(stars, Rapidity{args.chi});

  RenderSpec spec;
  spec.format = resolve_format(args);
  spec.projection = args.projection == "orthographic" ? Projection::Orthographic : Projection::Stereographic;
  spec.hemisphere = args.hemisphere == "south" ? Hemisphere::South
                    : args.hemisphere == "both" ? Hemisphere::Both
                                                : Hemisphere::North;
  spec.width = args.width;
  spec.height = args.height;

  const RenderResult after = render(transformed, spec, Frame::After);
  if (!args.before_out.empty()) write_output(args.before_out, render(transformed, spec, Frame::Before).bytes, out);
  if (after.dropped > 0)
    err << "render: " << after.dropped << " star(s) at the excluded pole of the projection were dropped\n";

  if (args.json_out) {
    constexpr double kDeg = std::numbers::pi / 180.0;
    json list = json::array();
    for (const TransformedStar& t : transformed) {
      json s;
      s["name"] = t.source.name;
      s["theta_deg"] = round12(to_polar(t.q_before).theta / kDeg);
      s["theta_prime_deg"] = round12(to_polar(t.q_after).theta / kDeg);
      s["doppler"] = round12(t.doppler);
      s["temp_k"] = round12(t.source.temp_k);
      s["temp_after"] = round12(t.temp_after);
      s["vmag"] = round12(t.source.vmag);
      s["vmag_after"] = round12(t.vmag_after);
      list.push_back(std::move(s));
    }
    json j;
    j["chi"] = round12(args.chi);
    j["drawn"] = after.drawn;
    j["outside"] = after.outside;
    j["dropped"] = after.dropped;
    j["stars"] = std::move(list);
    out << j.dump() << '\n';
  }
  // With --json and no --out the report owns the output stream.
  if (!args.out.empty() || !args.json_out) write_output(args.out, after.bytes, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentz transformations, spin covers and the celestial sphere", "celestial"};
  app.require_subcommand(1);

  MatrixArgs classify_args, decompose_args, lift_args;
  auto* classify = app.add_subcommand("classify", "Connected component of a Lorentz matrix");
  add_matrix_options(classify, classify_args);
  auto* decompose = app.add_subcommand("decompose", "Standard decomposition R1 * boost_x(chi) * R2");
  add_matrix_options(decompose, decompose_args);
  auto* lift = app.add_subcommand("lift", "SL(2,C) preimage of a proper orthochronous Lorentz matrix");
  add_matrix_options(lift, lift_args);

  std::string mobius_input;
  auto* mobius = app.add_subcommand("mobius", "Apply a Moebius map to points of the Riemann sphere");
  mobius->add_option("--input,-i", mobius_input, "JSON {\"a\",\"b\",\"c\",\"d\",\"points\"} (default: stdin)");

  AberrateArgs ab;
  auto* aberrate_cmd = app.add_subcommand("aberrate", "Apparent angle and Doppler factor after a boost");
  aberrate_cmd->add_option("--chi", ab.chi, "Rapidity of the boost")->required();
  aberrate_cmd->add_option("--theta-deg", ab.theta_deg, "Angle of the source from the boost direction, degrees")
      ->required();
  aberrate_cmd->add_flag("--json", ab.json_out, "Emit JSON");

  RenderArgs ra;
  auto* render_cmd = app.add_subcommand(
      "render", "Render a star catalog as seen after a boost along +x3 (rapidity chi = artanh(v/c), c = 299792458 m/s)");
  render_cmd->add_option("--chi", ra.chi, "Rapidity of the boost")->required();
  render_cmd->add_option("--input,-i", ra.input, "Catalog CSV: name,ra_deg,dec_deg,vmag[,temp_k]")->required();
  render_cmd->add_option("--out,-o", ra.out, "Image written here (default: stdout)");
  render_cmd->add_option("--before-out", ra.before_out, "Also render the unboosted sky to this path");
  render_cmd->add_option("--format", ra.format, "svg or ppm")->check(CLI::IsMember({"svg", "ppm"}));
  render_cmd->add_option("--projection", ra.projection, "stereographic or orthographic")
      ->check(CLI::IsMember({"stereographic", "orthographic"}));
  render_cmd->add_option("--hemisphere", ra.hemisphere, "north, south or both")
      ->check(CLI::IsMember({"north", "south", "both"}));
  render_cmd->add_option("--width", ra.width, "Image width in pixels")->check(CLI::Range(16, 16384));
  render_cmd->add_option("--height", ra.height, "Image height in pixels")->check(CLI::Range(16, 16384));
  render_cmd->add_flag("--json", ra.json_out, "Print a per-star JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*classify) run_classify(classify_args, in, out);
    else if (*decompose) run_decompose(decompose_args, in, out);
    else if (*lift) run_lift(lift_args, in, out);
    else if (*mobius) run_mobius(mobius_input, in, out);
    else if (*aberrate_cmd) run_aberrate(ab, out);
    else if (*render_cmd) run_render(ra, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace celestial::cli
