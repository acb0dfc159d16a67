#include "celestial/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "celestial/errors.hpp"

namespace celestial {

BondiPoint bondi_from_inertial(const FourVector& x) {
  const double r = std::hypot(x[1], x[2], x[3]);
  if (!(r > 1e-300)) throw OriginDirectionUndefined();
  return {x[0] + r, r, stereo_project(x[1], x[2], x[3], r)};
}

FourVector inertial_from_bondi(const BondiPoint& b) {
  const auto xs = inverse_stereo(b.q, b.r);
  return {{b.u - b.r, xs[0], xs[1], xs[2]}};
}

BondiPoint act_exact(const LorentzMatrix& lambda, const BondiPoint& b) {
  const FourVector xp = apply(lambda, inertial_from_bondi(b));
  const double rp = std::hypot(xp[1], xp[2], xp[3]);
  if (!(rp > 1e-300)) throw OriginDirectionUndefined();
  double up = xp[0] + rp;
  if (xp[0] < 0.0) {
    // u' = (r'^2 - x0'^2) / (r' - x0') and r'^2 - x0'^2 = r^2 - x0^2 = u (2r - u).
    up = b.u * (2.0 * b.r - b.u) / (rp - xp[0]);
  }
  return {up, rp, stereo_project(xp[1], xp[2], xp[3], rp)};
}

double AsymptoticAction::radial_factor(const SpherePoint& q) const {
  const SL2CElement& s = moebius_.matrix();
  const double num = std::norm(s.a() * q.z1() + s.b() * q.z2()) + std::norm(s.c() * q.z1() + s.d() * q.z2());
  return num / (std::norm(q.z1()) + std::norm(q.z2()));
}

double AsymptoticAction::time_factor(const SpherePoint& q) const {
  const SL2CElement& s = moebius_.matrix();
  // |z2|^2 / |c z1 + d z2|^2 = 1 / |c z + d|^2
  return std::norm(q.z2()) / std::norm(s.c() * q.z1() + s.d() * q.z2());
}

AsymptoticAction act_asymptotic(const SL2CElement& s) { return AsymptoticAction(s); }

namespace {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
}

}  // namespace

double aberrate(Rapidity chi, double theta) {
  check_theta(theta);
  if (theta == std::numbers::pi) return theta;
  const double half = 0.5 * theta;
  return 2.0 * std::atan2(std::exp(-chi.chi) * std::sin(half), std::cos(half));
}

double doppler(Rapidity chi, double theta) {
  check_theta(theta);
  // cosh + sinh cos(theta) = e^chi cos^2(theta/2) + e^-chi sin^2(theta/2).
  const double c2 = std::pow(std::cos(0.5 * theta), 2);
  const double s2 = std::pow(std::sin(0.5 * theta), 2);
  if (std::fabs(chi.chi) <= 1.0) {
    // Offsets from 1 keep chi = 0 exact.
    return 1.0 + c2 * std::expm1(chi.chi) + s2 * std::expm1(-chi.chi);
  }
  return c2 * std::exp(chi.chi) + s2 * std::exp(-chi.chi);
}

Photon4Momentum::Photon4Momentum(const FourVector& p) : p_(p) {
  if (!p.is_finite() || !(p[0] > 0.0)) throw DomainError("photon energy must be positive and finite");
  const double residual = std::fabs(interval_squared(p));
  if (!(residual <= 1e-9 * p[0] * p[0])) throw NotNull(residual);
}

Photon4Momentum Photon4Momentum::from_source(double energy, const PolarAngles& source) {
  const double st = std::sin(source.theta);
  const Vector3 n{st * std::cos(source.phi), st * std::sin(source.phi), std::cos(source.theta)};
  return Photon4Momentum(FourVector{{energy, -energy * n[0], -energy * n[1], -energy * n[2]}});
}

Photon4Momentum boost_photon(const LorentzMatrix& lambda, const Photon4Momentum& p) {
  if (!(lambda(0, 0) > 0.0)) throw NotOrthochronous();
  return Photon4Momentum(apply(lambda, p.p()));
}

}  // namespace celestial
