#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <optional>

#include "celestial/asymptotics.hpp"
#include "celestial/errors.hpp"
#include "celestial/starfield.hpp"

namespace celestial {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_row(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      if (!trim(field).empty()) throw ParseError(line_no, "stray quote in field " + std::to_string(fields.size() + 1));
      field.clear();
      quoted = was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field += ch;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quoted field");
  fields.push_back(was_quoted ? field : trim(field));
  return fields;
}

double parse_number(const std::string& text, std::size_t line_no, std::string_view column) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  // from_chars rejects a leading '+'; accept it for hand-written catalogs.
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw ParseError(line_no, "column " + std::string(column) + ": not a number: '" + text + "'");
  if (!std::isfinite(value)) throw RangeError(line_no, "column " + std::string(column) + " must be finite");
  return value;
}

struct Columns {
  std::size_t name, ra, dec, vmag;
  std::optional<std::size_t> temp;
  std::size_t count;
};

Columns parse_header(const std::string& line) {
  const std::vector<std::string> fields = split_row(line, 1);
  std::optional<std::size_t> name, ra, dec, vmag, temp;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    std::optional<std::size_t>* slot = nullptr;
    if (f == "name") slot = &name;
    else if (f == "ra_deg") slot = &ra;
    else if (f == "dec_deg") slot = &dec;
    else if (f == "vmag") slot = &vmag;
    else if (f == "temp_k") slot = &temp;
    else throw ParseError(1, "unknown column '" + f + "'");
    if (slot->has_value()) throw ParseError(1, "duplicate column '" + f + "'");
    *slot = i;
  }
  if (!name || !ra || !dec || !vmag) throw ParseError(1, "header must contain name,ra_deg,dec_deg,vmag");
  return {*name, *ra, *dec, *vmag, temp, fields.size()};
}

}  // namespace

PolarAngles star_direction(const StarRecord& star) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  const double theta = star.dec_deg == -90.0 ? std::numbers::pi : std::fmin((90.0 - star.dec_deg) * kDeg, std::numbers::pi);
  return {theta, star.ra_deg * kDeg};
}

std::vector<StarRecord> load_catalog(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Columns> cols;
  std::vector<StarRecord> stars;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    if (!cols) {
      if (line_no != 1) throw ParseError(line_no, "header must be the first line");
      cols = parse_header(line);
      continue;
    }
    const std::vector<std::string> f = split_row(line, line_no);
    if (f.size() != cols->count)
      throw ParseError(line_no, "expected " + std::to_string(cols->count) + " fields, found " + std::to_string(f.size()));

    StarRecord star;
    star.name = f[cols->name];
    star.ra_deg = parse_number(f[cols->ra], line_no, "ra_deg");
    star.dec_deg = parse_number(f[cols->dec], line_no, "dec_deg");
    star.vmag = parse_number(f[cols->vmag], line_no, "vmag");
    if (cols->temp && !f[*cols->temp].empty()) star.temp_k = parse_number(f[*cols->temp], line_no, "temp_k");

    if (star.name.empty()) throw ParseError(line_no, "column name: empty");
    if (!(star.ra_deg >= 0.0 && star.ra_deg < 360.0)) throw RangeError(line_no, "ra_deg must lie in [0, 360)");
    if (!(star.dec_deg >= -90.0 && star.dec_deg <= 90.0)) throw RangeError(line_no, "dec_deg must lie in [-90, 90]");
    if (!(star.temp_k > 0.0)) throw RangeError(line_no, "temp_k must be positive");
    stars.push_back(std::move(star));
  }
  if (!cols) throw ParseError(1, "missing header");
  return stars;
}

std::vector<StarRecord> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open catalog '" + path.string() + "'");
  return load_catalog(in);
}

std::vector<TransformedStar> transform_catalog(std::span<const StarRecord> stars, Rapidity chi) {
  const MoebiusTransform boost = MoebiusTransform::dilation(chi.chi);
  std::vector<TransformedStar> out;
  out.reserve(stars.size());
  for (const StarRecord& star : stars) {
    const PolarAngles dir = star_direction(star);
    TransformedStar t;
    t.source = star;
    t.q_before = from_polar(dir);
    t.q_after = moebius_apply(boost, t.q_before);
    t.doppler = doppler(chi, dir.theta);
    t.temp_after = t.doppler * star.temp_k;
    t.vmag_after = star.vmag - 10.0 * std::log10(t.doppler);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace celestial
