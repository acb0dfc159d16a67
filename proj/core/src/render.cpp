#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

#include "celestial/errors.hpp"
#include "celestial/starfield.hpp"

namespace celestial {
namespace {

struct ColourStop {
  double temp;
  Rgb rgb;
};

// Approximate sRGB colour of a blackbody, sampled at 16 temperatures.
constexpr std::array<ColourStop, 16> kBlackbody{{
    {1000.0, {255, 56, 0}},
    {1500.0, {255, 109, 0}},
    {2000.0, {255, 137, 18}},
    {2500.0, {255, 161, 72}},
    {3000.0, {255, 180, 107}},
    {3500.0, {255, 196, 137}},
    {4000.0, {255, 209, 163}},
    {5000.0, {255, 228, 206}},
    {6000.0, {255, 243, 239}},
    {6500.0, {255, 249, 253}},
    {7000.0, {245, 243, 255}},
    {8000.0, {227, 233, 255}},
    {10000.0, {204, 219, 255}},
    {15000.0, {181, 205, 255}},
    {20000.0, {170, 198, 255}},
    {40000.0, {155, 188, 255}},
}};

constexpr Rgb kBackground{0, 0, 0};
constexpr Rgb kHorizon{64, 64, 64};

struct Panel {
  double cx, cy, radius;
  bool north;  // shows x3 >= 0
};

std::vector<Panel> layout(const RenderSpec& spec) {
  const double w = spec.width;
  const double h = spec.height;
  if (spec.hemisphere == Hemisphere::Both) {
    const double radius = std::fmax(1.0, std::fmin(0.5 * w, h) / 2.0 - 8.0);
    return {{0.25 * w, 0.5 * h, radius, true}, {0.75 * w, 0.5 * h, radius, false}};
  }
  const double radius = std::fmax(1.0, std::fmin(w, h) / 2.0 - 8.0);
  return {{0.5 * w, 0.5 * h, radius, spec.hemisphere == Hemisphere::North}};
}

struct Placed {
  double x, y, radius;
  Rgb rgb;
};

enum class Placement { Drawn, Outside, Dropped };

// Plane coordinate of q inside a panel, scaled so the horizon is |w| = 1.
Placement place(const SpherePoint& q, const Panel& panel, Projection projection, Complex& w) {
  const auto x = inverse_stereo(q, 1.0);
  const bool northern = x[2] >= 0.0;
  if (projection == Projection::Orthographic) {
    if (northern != panel.north) return Placement::Outside;
    w = Complex(x[0], x[1]);
    return Placement::Drawn;
  }
  // Stereographic: the north panel projects through the south pole (w = z),
  // the south panel through the north pole (w = 1 / conj z).
  const Complex num = panel.north ? q.z1() : std::conj(q.z2());
  const Complex den = panel.north ? q.z2() : std::conj(q.z1());
  if (den == 0.0) return Placement::Dropped;
  if (northern != panel.north) return Placement::Outside;
  w = num / den;
  return Placement::Drawn;
}

std::vector<Placed> place_all(std::span<const TransformedStar> stars, const RenderSpec& spec, Frame frame,
                              const std::vector<Panel>& panels, RenderResult& result) {
  std::vector<Placed> placed;
  placed.reserve(stars.size());
  for (const TransformedStar& star : stars) {
    const bool after = frame == Frame::After;
    const SpherePoint& q = after ? star.q_after : star.q_before;
    const double vmag = after ? star.vmag_after : star.source.vmag;
    const double temp = after ? star.temp_after : star.source.temp_k;

    std::optional<Placed> hit;
    bool dropped = false;
    for (const Panel& panel : panels) {
      Complex w;
      const Placement p = place(q, panel, spec.projection, w);
      if (p == Placement::Dropped) dropped = true;
      if (p != Placement::Drawn) continue;
      hit = Placed{panel.cx + panel.radius * w.real(), panel.cy - panel.radius * w.imag(), disc_radius(vmag),
                   blackbody_rgb(temp)};
      break;
    }
    if (hit) {
      placed.push_back(*hit);
      ++result.drawn;
    } else if (dropped && panels.size() == 1) {
      ++result.dropped;
    } else {
      ++result.outside;
    }
  }
  return placed;
}

void append_fixed(std::string& out, double v) {
  char buf[64];
  // Collapse -0.000 to 0.000 so mirrored inputs render identically.
  if (std::fabs(v) < 5e-4) v = 0.0;
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 3);
  out.append(buf, res.ptr);
}

void append_hex(std::string& out, const Rgb& rgb) {
  static constexpr char kDigits[] = "0123456789abcdef";
  out += '#';
  for (std::uint8_t c : rgb) {
    out += kDigits[c >> 4];
    out += kDigits[c & 15];
  }
}

std::string render_svg(const RenderSpec& spec, const std::vector<Panel>& panels, const std::vector<Placed>& placed) {
  const std::string w = std::to_string(spec.width);
  const std::string h = std::to_string(spec.height);
  std::string out;
  out.reserve(128 + 64 * placed.size());
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w +
         " " + h + "\">\n";
  out += "<rect width=\"" + w + "\" height=\"" + h + "\" fill=\"";
  append_hex(out, kBackground);
  out += "\"/>\n";
  for (const Panel& p : panels) {
    out += "<circle cx=\"";
    append_fixed(out, p.cx);
    out += "\" cy=\"";
    append_fixed(out, p.cy);
    out += "\" r=\"";
    append_fixed(out, p.radius);
    out += "\" fill=\"none\" stroke=\"";
    append_hex(out, kHorizon);
    out += "\" stroke-width=\"1\"/>\n";
  }
  for (const Placed& s : placed) {
    out += "<circle cx=\"";
    append_fixed(out, s.x);
    out += "\" cy=\"";
    append_fixed(out, s.y);
    out += "\" r=\"";
    append_fixed(out, s.radius);
    out += "\" fill=\"";
    append_hex(out, s.rgb);
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_ppm(const RenderSpec& spec, const std::vector<Panel>& panels, const std::vector<Placed>& placed) {
  const std::size_t w = static_cast<std::size_t>(spec.width);
  const std::size_t h = static_cast<std::size_t>(spec.height);
  std::vector<Rgb> pixels(w * h, kBackground);

  auto for_box = [&](double cx, double cy, double reach, auto&& visit) {
    const long x0 = std::max(0L, static_cast<long>(std::floor(cx - reach)));
    const long x1 = std::min(static_cast<long>(w) - 1, static_cast<long>(std::ceil(cx + reach)));
    const long y0 = std::max(0L, static_cast<long>(std::floor(cy - reach)));
    const long y1 = std::min(static_cast<long>(h) - 1, static_cast<long>(std::ceil(cy + reach)));
    for (long y = y0; y <= y1; ++y)
      for (long x = x0; x <= x1; ++x) {
        const double dx = static_cast<double>(x) + 0.5 - cx;
        const double dy = static_cast<double>(y) + 0.5 - cy;
        visit(pixels[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)], std::hypot(dx, dy));
      }
  };

  for (const Panel& p : panels)
    for_box(p.cx, p.cy, p.radius + 1.0, [&](Rgb& px, double d) {
      if (std::fabs(d - p.radius) < 0.5) px = kHorizon;
    });
  for (const Placed& s : placed)
    for_box(s.x, s.y, s.radius, [&](Rgb& px, double d) {
      if (d <= s.radius) px = s.rgb;
    });

  std::string out = "P6\n" + std::to_string(w) + " " + std::to_string(h) + "\n255\n";
  const std::size_t header = out.size();
  out.resize(header + 3 * pixels.size());
  for (std::size_t i = 0; i < pixels.size(); ++i)
    for (std::size_t c = 0; c < 3; ++c) out[header + 3 * i + c] = static_cast<char>(pixels[i][c]);
  return out;
}

}  // namespace

Rgb blackbody_rgb(double temp_k) {
  if (!(temp_k > kBlackbody.front().temp)) return kBlackbody.front().rgb;
  if (temp_k >= kBlackbody.back().temp) return kBlackbody.back().rgb;
  std::size_t hi = 1;
  while (kBlackbody[hi].temp < temp_k) ++hi;
  const ColourStop& lo_stop = kBlackbody[hi - 1];
  const ColourStop& hi_stop = kBlackbody[hi];
  const double t = (temp_k - lo_stop.temp) / (hi_stop.temp - lo_stop.temp);
  Rgb out{};
  for (std::size_t c = 0; c < 3; ++c) {
    const double v = lo_stop.rgb[c] + t * (static_cast<double>(hi_stop.rgb[c]) - lo_stop.rgb[c]);
    out[c] = static_cast<std::uint8_t>(std::lround(v));
  }
  return out;
}

double disc_radius(double vmag) { return std::clamp(6.0 - vmag * (5.0 / 6.0), 1.0, 6.0); }

RenderResult render(std::span<const TransformedStar> stars, const RenderSpec& spec, Frame frame) {
  if (spec.width < 16 || spec.height < 16) throw DomainError("image width and height must be at least 16 pixels");
  const std::vector<Panel> panels = layout(spec);
  RenderResult result;
  const std::vector<Placed> placed = place_all(stars, spec, frame, panels, result);
  result.bytes = spec.format == ImageFormat::Svg ? render_svg(spec, panels, placed) : render_ppm(spec, panels, placed);
  return result;
}

}  // namespace celestial
