#include <doctest.h>

#include <numbers>

#include "support.hpp"

using namespace celestial;
using doctest::Approx;
using testing_support::to_sl2c;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;
const Complex kI(0.0, 1.0);

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("Bondi coordinates of simple events") {
  BondiPoint b = bondi_from_inertial(FourVector{{0, 0, 0, 1}});
  CHECK(b.u == 1.0);
  CHECK(b.r == 1.0);
  CHECK(std::abs(b.q.value()) == 0.0);

  b = bondi_from_inertial(FourVector{{-5, 0, 0, 5}});
  CHECK(b.u == 0.0);
  CHECK(b.r == 5.0);
  CHECK(std::abs(b.q.value()) == 0.0);

  b = bondi_from_inertial(FourVector{{0, 1, 0, 0}});
  CHECK(b.u == 1.0);
  CHECK(b.r == 1.0);
  CHECK(std::abs(b.q.value() - 1.0) < 1e-15);

  CHECK(bondi_from_inertial(FourVector{{0, 0, 0, -2}}).q.is_infinity());
  CHECK_THROWS_AS(bondi_from_inertial(FourVector{{1, 0, 0, 0}}), OriginDirectionUndefined);

  oracle::Sampler rng(51);
  for (int i = 0; i < 200; ++i) {
    const FourVector x{{rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10), rng.uniform(-10, 10)}};
    const FourVector y = inertial_from_bondi(bondi_from_inertial(x));
    for (std::size_t k = 0; k < 4; ++k) CHECK(y[k] == Approx(x[k]).scale(10.0));
  }
}

TEST_CASE("exact action") {
  oracle::Sampler rng(52);
  const BondiPoint b{2.0, 3.0, SpherePoint::from_complex(Complex(0.4, -0.2))};
  const BondiPoint same = act_exact(LorentzMatrix{}, b);
  CHECK(same.u == Approx(b.u));
  CHECK(same.r == Approx(b.r));
  CHECK(same.q.same_as(b.q));

  const double theta = 0.9;
  const BondiPoint rotated = act_exact(rotation_embed(oracle::rot_z(theta)), b);
  CHECK(rotated.u == Approx(b.u));
  CHECK(rotated.r == Approx(b.r));
  CHECK(rotated.q.same_as(SpherePoint::from_complex(b.q.value() * std::exp(kI * theta))));

  const double chi = 1.3;
  const BondiPoint far{0.5, 1e9, SpherePoint{}};
  const BondiPoint boosted = act_exact(boost_axis({0, 0, 1}, Rapidity{chi}), far);
  CHECK(boosted.r / far.r == Approx(std::exp(chi)).epsilon(1e-8));

  // The exact action agrees with multiplying the inertial coordinates.
  for (int i = 0; i < 100; ++i) {
    const LorentzMatrix l = validate_lorentz(rng.lorentz(2.0));
    const BondiPoint p{rng.uniform(-3, 3), rng.uniform(0.5, 5.0), SpherePoint::from_complex(rng.complex_in_disc(3.0))};
    const FourVector expect = apply(l, inertial_from_bondi(p));
    const FourVector got = inertial_from_bondi(act_exact(l, p));
    for (std::size_t k = 0; k < 4; ++k) CHECK(got[k] == Approx(expect[k]).scale(1.0).epsilon(1e-10));
  }
}

TEST_CASE("advanced time keeps its precision far away") {
  // u' of a point with r = 1e12 would lose every digit to x0' + r'.
  const double chi = 0.7;
  const BondiPoint far{1.5, 1e12, SpherePoint::from_complex(Complex(0.3, 0.1))};
  const AsymptoticAction asym = act_asymptotic(lift_lorentz_to_sl2c(boost_axis({0, 0, 1}, Rapidity{chi})));
  const BondiPoint img = act_exact(boost_axis({0, 0, 1}, Rapidity{chi}), far);
  CHECK(img.u == Approx(far.u * asym.round_sphere_time_factor(far.q)).epsilon(1e-9));
}

TEST_CASE("asymptotic action of simple spinors") {
  const AsymptoticAction id = act_asymptotic(SL2CElement{});
  oracle::Sampler rng(53);
  const SpherePoint q = SpherePoint::from_complex(rng.complex_in_disc(2.0));
  CHECK(id.map(q).same_as(q));
  CHECK(id.radial_factor(q) == Approx(1.0));
  CHECK(id.time_factor(q) == Approx(1.0));

  const double chi = 0.9;
  const AsymptoticAction boost = act_asymptotic(SL2CElement(std::exp(-chi / 2), 0.0, 0.0, std::exp(chi / 2)));
  CHECK(std::abs(boost.map(SpherePoint{}).value()) == 0.0);
  CHECK(boost.radial_factor(SpherePoint{}) == Approx(std::exp(chi)));
  CHECK(boost.time_factor(SpherePoint{}) == Approx(std::exp(-chi)));
  CHECK(boost.round_sphere_time_factor(SpherePoint{}) == Approx(std::exp(-chi)));

  const Complex b(0.5, -1.0);
  const AsymptoticAction shift = act_asymptotic(SL2CElement(1.0, b, 0.0, 1.0));
  for (int i = 0; i < 20; ++i) {
    const Complex z = rng.complex_in_disc(3.0);
    CHECK(shift.time_factor(SpherePoint::from_complex(z)) == Approx(1.0));
    CHECK(std::abs(shift.map(SpherePoint::from_complex(z)).value() - (z + b)) < 1e-14);
  }

  // F is finite and positive on the whole sphere, infinity included.
  const AsymptoticAction any = act_asymptotic(to_sl2c(rng.sl2c()));
  CHECK(any.radial_factor(SpherePoint::infinity()) > 0.0);
}

TEST_CASE("exact action converges to the asymptotic one") {
  oracle::Sampler rng(54);
  for (int i = 0; i < 40; ++i) {
    const SL2CElement s = to_sl2c(rng.sl2c());
    const LorentzMatrix l = sl2c_to_lorentz(s);
    const AsymptoticAction asym = act_asymptotic(s);
    const SpherePoint q = SpherePoint::from_complex(rng.complex_in_disc(2.0));
    const double u = rng.uniform(-2.0, 2.0);
    double prev_z = 0.0, prev_r = 0.0, prev_u = 0.0;
    for (double r : {1e6, 1e7}) {
      const BondiPoint img = act_exact(l, BondiPoint{u, r, q});
      const double ez = img.q.distance(asym.map(q));
      const double er = std::fabs(img.r / r - asym.radial_factor(q));
      const double eu = std::fabs(img.u - u * asym.round_sphere_time_factor(q));
      if (r == 1e7 && prev_z > 1e-13) CHECK(ez / prev_z == Approx(0.1).epsilon(0.1));
      if (r == 1e7 && prev_r > 1e-13) CHECK(er / prev_r == Approx(0.1).epsilon(0.1));
      if (r == 1e7 && prev_u > 1e-9) CHECK(eu / prev_u == Approx(0.1).epsilon(0.1));
      prev_z = ez;
      prev_r = er;
      prev_u = eu;
    }
  }
}

TEST_CASE("aberration") {
  CHECK(aberrate(Rapidity{2.0}, 0.0) == 0.0);
  CHECK(aberrate(Rapidity{2.0}, kPi) == kPi);
  CHECK(aberrate(Rapidity{kLn2}, kPi / 2) == Approx(2.0 * std::atan(0.5)).epsilon(1e-15));
  CHECK(aberrate(Rapidity{kLn2}, kPi / 2) == Approx(0.927295218).epsilon(1e-9));
  CHECK_THROWS_AS(aberrate(Rapidity{1.0}, -0.1), DomainError);
  CHECK_THROWS_AS(aberrate(Rapidity{1.0}, 4.0), DomainError);

  oracle::Sampler rng(55);
  for (int i = 0; i < 300; ++i) {
    const double chi = rng.uniform(-4.0, 4.0);
    const double theta = rng.uniform(1e-3, kPi - 1e-3);
    const double got = aberrate(Rapidity{chi}, theta);
    CHECK(got == Approx(oracle::photon_apparent_theta(chi, theta)).epsilon(1e-10));
    const SpherePoint img = moebius_apply(MoebiusTransform::dilation(chi), from_polar({theta, 0.0}));
    CHECK(to_polar(img).theta == Approx(got).epsilon(1e-12));
    if (chi > 0) CHECK(got < theta);
    if (chi < 0) CHECK(got > theta);
  }
}

TEST_CASE("Doppler factor") {
  CHECK(doppler(Rapidity{0.0}, 1.234) == 1.0);
  CHECK(doppler(Rapidity{kLn2}, 0.0) == Approx(2.0).epsilon(1e-15));
  CHECK(doppler(Rapidity{kLn2}, kPi) == Approx(0.5).epsilon(1e-15));
  CHECK(oracle::photon_energy_ratio(kLn2, 0.0) == Approx(2.0).epsilon(1e-15));

  oracle::Sampler rng(56);
  for (int i = 0; i < 300; ++i) {
    const double chi = rng.uniform(-6.0, 6.0);
    const double theta = rng.uniform(0.0, kPi);
    const double d = doppler(Rapidity{chi}, theta);
    CHECK(d > 0.0);
    CHECK(d == Approx(oracle::photon_energy_ratio(chi, theta, rng.uniform(0, 2 * kPi))).epsilon(1e-11));
    // The emitter frame sees the reciprocal shift.
    CHECK(d * doppler(Rapidity{-chi}, aberrate(Rapidity{chi}, theta)) == Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("photon boosts") {
  const Photon4Momentum p(FourVector{{1, -1, 0, 0}});
  const Photon4Momentum same = boost_photon(LorentzMatrix{}, p);
  CHECK(same.p() == p.p());

  const double chi = 0.8;
  const Photon4Momentum b = boost_photon(boost_x(Rapidity{chi}), p);
  for (std::size_t k = 0; k < 4; ++k) CHECK(b.p()[k] == Approx(std::exp(chi) * p.p()[k]).scale(1.0));

  const Photon4Momentum side = boost_photon(boost_x(Rapidity{kLn2}), Photon4Momentum(FourVector{{1, 0, -1, 0}}));
  CHECK(side.energy() == Approx(1.25));
  // Angle from the x1 axis of the source direction -p: tan = sin / (sinh + cosh cos).
  const double theta = std::atan2(std::hypot(side.p()[2], side.p()[3]), -side.p()[1]);
  CHECK(std::tan(theta) == Approx(1.0 / 0.75));
  CHECK(theta == Approx(aberrate(Rapidity{kLn2}, kPi / 2)));

  const Photon4Momentum src = Photon4Momentum::from_source(2.0, {0.0, 0.0});
  CHECK(src.p()[3] == -2.0);
  CHECK(boost_photon(boost_axis({0, 0, 1}, Rapidity{kLn2}), src).energy() == Approx(4.0));

  CHECK_THROWS_AS(Photon4Momentum(FourVector{{1, 0, 0, 0}}), NotNull);
  CHECK_THROWS_AS(Photon4Momentum(FourVector{{-1, 1, 0, 0}}), DomainError);
  CHECK_THROWS_AS(boost_photon(time_reversal(), p), NotOrthochronous);
}

}  // TEST_SUITE
