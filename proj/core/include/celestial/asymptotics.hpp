#pragma once

// Bondi coordinates (u, r, z) with advanced time u = x0 + r, the exact action
// of a Lorentz matrix on them, its r -> infinity limit, and the optics of a
// boost (aberration and Doppler factor).

#include "celestial/minkowski.hpp"
#include "celestial/riemann_sphere.hpp"

namespace celestial {

struct BondiPoint {
  double u = 0.0;
  double r = 0.0;
  SpherePoint q;
};

/// Throws OriginDirectionUndefined when r <= 1e-300.
BondiPoint bondi_from_inertial(const FourVector& x);
FourVector inertial_from_bondi(const BondiPoint& b);

/// bondi_from_inertial(Lambda * inertial_from_bondi(b)). The advanced time of
/// the image is evaluated through the invariant x.x = u (2r - u) whenever the
/// direct sum x0' + r' would cancel.
BondiPoint act_exact(const LorentzMatrix& lambda, const BondiPoint& b);

/// Leading behaviour of the Lorentz matrix sl2c_to_lorentz(S) at past null
/// infinity: z' = (a z + b) / (c z + d), r' = r F(z) + O(1).
class AsymptoticAction {
 public:
  explicit AsymptoticAction(const SL2CElement& s) : moebius_(s) {}

  const MoebiusTransform& moebius() const { return moebius_; }
  SpherePoint map(const SpherePoint& q) const { return moebius_apply(moebius_, q); }

  /// F = (|a z + b|^2 + |c z + d|^2) / (1 + |z|^2); defined on the whole sphere.
  double radial_factor(const SpherePoint& q) const;

  /// 1 / |c z + d|^2, the advanced-time rescaling in the conformally flat
  /// normalization of the celestial sphere. Infinite where c z + d = 0.
  double time_factor(const SpherePoint& q) const;

  /// 1 / F, the limit of u'/u in the round-sphere Bondi coordinates used by
  /// bondi_from_inertial. Equals time_factor * (1 + |z|^2) / (1 + |z'|^2).
  double round_sphere_time_factor(const SpherePoint& q) const { return 1.0 / radial_factor(q); }

 private:
  MoebiusTransform moebius_;
};

AsymptoticAction act_asymptotic(const SL2CElement& s);

/// Apparent polar angle after a boost of rapidity chi towards theta = 0:
/// tan(theta'/2) = e^{-chi} tan(theta/2). Throws DomainError unless theta is in [0, pi].
double aberrate(Rapidity chi, double theta);

/// E'/E = cosh(chi) + sinh(chi) cos(theta) for a source at angle theta from
/// the boost direction. Always positive.
double doppler(Rapidity chi, double theta);

/// Null four-momentum with positive energy; the photon travels along -n where
/// n is the direction of its source.
class Photon4Momentum {
 public:
  /// Throws NotNull unless |p.p| <= 1e-9 E^2, DomainError unless E > 0.
  explicit Photon4Momentum(const FourVector& p);
  /// Photon from a source in direction (theta, phi), energy E.
  static Photon4Momentum from_source(double energy, const PolarAngles& source);

  const FourVector& p() const { return p_; }
  double energy() const { return p_[0]; }

 private:
  FourVector p_;
};

/// p' = Lambda p. Throws NotOrthochronous for time-reversing Lambda.
Photon4Momentum boost_photon(const LorentzMatrix& lambda, const Photon4Momentum& p);

}  // namespace celestial
