#include <doctest.h>

#include <cli.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "support.hpp"

using doctest::Approx;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = celestial::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string matrix_json(const celestial::Matrix4& m) {
  json j;
  j["m"] = m;
  return j.dump();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("celestial-cli-" + std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("aberrate") {
  Run r = run({"aberrate", "--chi", "0", "--theta-deg", "45"});
  CHECK(r.code == 0);
  CHECK(r.out == "45\n1\n");

  r = run({"aberrate", "--chi", "0.693147180559945", "--theta-deg", "90", "--json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["theta_prime_deg"].get<double>() == Approx(2.0 * std::atan(0.5) * 180.0 / std::numbers::pi).epsilon(1e-11));
  CHECK(j["doppler"].get<double>() == Approx(1.25).epsilon(1e-11));

  CHECK(run({"aberrate", "--chi", "1", "--theta-deg", "200"}).code == 1);
  CHECK(run({"aberrate", "--chi", "1"}).code == 2);
}

TEST_CASE("twelve significant digits") {
  const Run r = run({"aberrate", "--chi", "1", "--theta-deg", "30"});
  REQUIRE(r.code == 0);
  const std::string first = r.out.substr(0, r.out.find('\n'));
  std::size_t digits = 0;
  for (char c : first) digits += (c >= '0' && c <= '9');
  CHECK(digits <= 12);
  CHECK(std::stod(first) == Approx(celestial::aberrate(celestial::Rapidity{1.0}, std::numbers::pi / 6) * 180.0 /
                                   std::numbers::pi)
                                .epsilon(1e-11));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Run r = run({"aberrate", "--chi", "1", "--theta-deg", "3", "--bogus"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  CHECK(run({"aberrate", "--chi", "abc", "--theta-deg", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"render", "--help"}).out.find("--hemisphere") != std::string::npos);
}

TEST_CASE("classify") {
  Run r = run({"classify"}, matrix_json(celestial::parity().matrix()));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["component"] == "ImproperOrthochronous");
  r = run({"classify"}, matrix_json(celestial::time_reversal().matrix()));
  CHECK(json::parse(r.out)["component"] == "ImproperAntichronous");
  CHECK(run({"classify"}, "{\"m\": [[1,0],[0,1]]}").code == 1);
  CHECK(run({"classify"}, "not json").code == 1);
}

TEST_CASE("decompose") {
  oracle::Sampler rng(71);
  const celestial::LorentzMatrix l = celestial::validate_lorentz(rng.lorentz(2.0));
  Run r = run({"decompose"}, matrix_json(l.matrix()));
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const celestial::StandardDecomposition d{j["r1"].get<celestial::Matrix3>(), celestial::Rapidity{j["chi"].get<double>()},
                                           j["r2"].get<celestial::Matrix3>()};
  CHECK(celestial::max_abs_diff(celestial::recompose(d).matrix(), l.matrix()) < 1e-9);

  celestial::Matrix4 bad = celestial::identity<4>();
  bad[3][3] = 2.0;
  r = run({"decompose"}, matrix_json(bad));
  CHECK(r.code == 1);
  CHECK(r.err.find("residual") != std::string::npos);
  CHECK(run({"decompose"}, matrix_json(celestial::parity().matrix())).code == 1);

  // --tol loosens validation.
  bad = celestial::identity<4>();
  bad[3][3] = 1.0 + 1e-7;
  CHECK(run({"decompose"}, matrix_json(bad)).code == 1);
  CHECK(run({"decompose", "--tol", "1e-6"}, matrix_json(bad)).code == 0);
}

TEST_CASE("lift") {
  const double chi = 0.5;
  const Run r = run({"lift"}, matrix_json(celestial::boost_axis({0, 0, 1}, celestial::Rapidity{chi}).matrix()));
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["a"][0].get<double>() == Approx(std::exp(-chi / 2)));
  CHECK(j["d"][0].get<double>() == Approx(std::exp(chi / 2)));
  CHECK(j["b"][0].get<double>() == 0.0);
}

TEST_CASE("mobius") {
  Run r = run({"mobius"}, R"({"a": 1, "b": [0, 0], "c": 0, "d": 2, "points": [[1, 1], "inf", 0]})");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["points"][0][0].get<double>() == Approx(0.5));
  CHECK(j["points"][0][1].get<double>() == Approx(0.5));
  CHECK(j["points"][1] == "inf");
  CHECK(j["points"][2][0].get<double>() == 0.0);

  r = run({"mobius"}, R"({"a": 0, "b": 1, "c": -1, "d": 0, "points": [0]})");
  CHECK(json::parse(r.out)["points"][0] == "inf");
  CHECK(run({"mobius"}, R"({"a": 1, "b": 1, "c": 1, "d": 1, "points": [0]})").code == 1);
  CHECK(run({"mobius"}, R"({"a": 1, "b": 0, "c": 0})").code == 1);
}

TEST_CASE("render") {
  TempDir dir;
  write(dir / "stars.csv",
        "name,ra_deg,dec_deg,vmag,temp_k\nPolaris,37.95,89.26,1.98,7000\nPole,0,90,2,6000\nEq,10,0,3,5000\n"
        "South,0,-90,1,5000\n");
  const std::string csv = (dir / "stars.csv").string();

  Run r = run({"render", "--chi", "0.693147", "--input", csv, "--out", (dir / "sky.svg").string()});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "sky.svg").starts_with("<?xml"));
  CHECK(r.err.find("1 star") != std::string::npos);  // the south pole is dropped

  r = run({"render", "--chi", "0", "--input", csv, "--out", (dir / "after.svg").string(), "--before-out",
           (dir / "before.svg").string()});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "after.svg") == slurp(dir / "before.svg"));

  r = run({"render", "--chi", "0.693147180559945", "--input", csv, "--json", "--out", (dir / "x.ppm").string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "x.ppm").starts_with("P6\n"));
  const json report = json::parse(r.out);
  const json& pole = report["stars"][1];
  CHECK(pole["name"] == "Pole");
  CHECK(pole["temp_after"].get<double>() == Approx(12000.0).epsilon(1e-11));
  CHECK(pole["vmag_after"].get<double>() - 2.0 == Approx(-10.0 * std::log10(2.0)).epsilon(1e-10));

  r = run({"render", "--chi", "1", "--input", csv, "--hemisphere", "both", "--projection", "orthographic"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("<?xml"));

  CHECK(run({"render", "--chi", "1", "--input", (dir / "missing.csv").string()}).code == 1);
  CHECK(run({"render", "--chi", "1", "--input", csv, "--format", "gif"}).code == 2);
  CHECK(run({"render", "--chi", "1", "--input", csv, "--width", "4"}).code == 2);
  write(dir / "bad.csv", "name,ra_deg,dec_deg,vmag\nX,10,95,1\n");
  r = run({"render", "--chi", "1", "--input", (dir / "bad.csv").string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
}

}  // TEST_SUITE
