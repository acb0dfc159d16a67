#pragma once

// Star catalogs seen from a boosted observer: CSV ingestion, aberration and
// Doppler shift of every star, and deterministic SVG / PPM sky maps.
//
// The photometric model goes beyond pure kinematics: a star's colour
// temperature scales with the Doppler factor D (blackbody peak shift) and its
// magnitude brightens by 10 log10 D (bolometric beaming, flux ~ D^4).

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "celestial/minkowski.hpp"
#include "celestial/riemann_sphere.hpp"

namespace celestial {

inline constexpr double kSolarTemperature = 5778.0;

struct StarRecord {
  std::string name;
  double ra_deg = 0.0;   // [0, 360)
  double dec_deg = 0.0;  // [-90, 90]
  double vmag = 0.0;
  double temp_k = kSolarTemperature;  // > 0
};

/// Polar angles of a star: theta from the +x3 axis (north celestial pole),
/// phi = right ascension.
PolarAngles star_direction(const StarRecord& star);

/// CSV with header name,ra_deg,dec_deg,vmag[,temp_k] (columns matched by
/// name). Blank lines are skipped and fields may be double-quoted. Throws
/// ParseError for malformed rows and RangeError for out-of-range values.
std::vector<StarRecord> load_catalog(std::istream& in);
std::vector<StarRecord> load_catalog(const std::filesystem::path& path);

struct TransformedStar {
  StarRecord source;
  SpherePoint q_before;
  SpherePoint q_after;
  double doppler = 1.0;
  double temp_after = kSolarTemperature;
  double vmag_after = 0.0;
};

/// Boost with rapidity chi along +x3. Output order equals input order.
std::vector<TransformedStar> transform_catalog(std::span<const StarRecord> stars, Rapidity chi);

enum class Projection { Stereographic, Orthographic };
enum class ImageFormat { Svg, Ppm };
enum class Hemisphere { North, South, Both };
/// Which positions and photometry of a TransformedStar to draw.
enum class Frame { Before, After };

struct RenderSpec {
  Projection projection = Projection::Stereographic;
  int width = 512;
  int height = 512;
  ImageFormat format = ImageFormat::Svg;
  Hemisphere hemisphere = Hemisphere::North;
};

struct RenderResult {
  std::string bytes;
  std::size_t drawn = 0;
  std::size_t outside = 0;  // on the hemisphere that is not shown
  std::size_t dropped = 0;  // at the excluded pole of the projection
};

/// Throws DomainError unless width and height are at least 16.
RenderResult render(std::span<const TransformedStar> stars, const RenderSpec& spec, Frame frame = Frame::After);

using Rgb = std::array<std::uint8_t, 3>;

/// Linear interpolation in a 16-entry blackbody colour table (1000 K .. 40000 K, clamped).
Rgb blackbody_rgb(double temp_k);

/// 6 px at magnitude 0 down to 1 px at magnitude 6, clamped to [1, 6].
double disc_radius(double vmag);

}  // namespace celestial
