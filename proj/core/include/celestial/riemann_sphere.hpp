#pragma once

// The Riemann sphere in homogeneous coordinates (z1 : z2), z = z1 / z2.
// The south pole z = infinity is the ordinary point z2 = 0.

#include <array>

#include "celestial/spin_covers.hpp"

namespace celestial {

inline constexpr double kSamePointTol = 1e-10;

class SpherePoint {
 public:
  SpherePoint();  // z = 0 (north pole)

  /// Throws DomainError when both coordinates vanish or are not finite.
  static SpherePoint homogeneous(Complex z1, Complex z2);
  static SpherePoint from_complex(Complex z);
  static SpherePoint infinity();

  Complex z1() const { return z1_; }
  Complex z2() const { return z2_; }
  bool is_infinity() const { return z2_ == 0.0; }
  /// z1 / z2; throws InfinityPoint at the south pole.
  Complex value() const;

  /// Equality up to a common complex phase: |z1 w2 - z2 w1| <= tol.
  bool same_as(const SpherePoint& other, double tol = kSamePointTol) const;
  /// Chordal distance / 2, in [0, 1].
  double distance(const SpherePoint& other) const;

 private:
  SpherePoint(Complex z1, Complex z2) : z1_(z1), z2_(z2) {}
  Complex z1_, z2_;
};

struct PolarAngles {
  double theta = 0.0;  // [0, pi], measured from +x3
  double phi = 0.0;    // [0, 2 pi)
};

/// z = e^{i phi} tan(theta / 2); theta = pi is the point at infinity.
/// Throws DomainError outside the stated ranges.
SpherePoint from_polar(const PolarAngles& p);
/// phi is reported as 0 at both poles.
PolarAngles to_polar(const SpherePoint& q);

/// z = (x1 + i x2) / (r + x3). Throws NotOnSphere unless
/// |x1^2 + x2^2 + x3^2 - r^2| <= 1e-9 r^2, DomainError unless r > 0.
SpherePoint stereo_project(double x1, double x2, double x3, double r);
std::array<double, 3> inverse_stereo(const SpherePoint& q, double r);

/// 4 r^2 / (1 + |z|^2)^2. Throws InfinityPoint at z = infinity.
double sphere_metric_factor(const SpherePoint& q, double r);

/// z -> -1 / conj(z), the image of spatial parity.
SpherePoint antipode(const SpherePoint& q);

/// Orientation-preserving conformal map z -> (a z + b) / (c z + d) of the
/// sphere, carried by an SL(2,C) matrix; S and -S act identically.
class MoebiusTransform {
 public:
  MoebiusTransform() = default;
  explicit MoebiusTransform(const SL2CElement& s) : s_(s) {}

  static MoebiusTransform identity() { return {}; }
  /// z -> z + b
  static MoebiusTransform translation(Complex b);
  /// z -> e^{-i theta} z, the action of a rotation by theta about x3.
  static MoebiusTransform rotation(double theta);
  /// z -> e^{-chi} z, the action of a boost with rapidity chi along x3.
  static MoebiusTransform dilation(double chi);
  /// z -> -b^2 / z. Throws DomainError for b = 0.
  static MoebiusTransform special(Complex b);

  const SL2CElement& matrix() const { return s_; }

 private:
  SL2CElement s_;
};

SpherePoint moebius_apply(const MoebiusTransform& t, const SpherePoint& q);
/// apply(compose(t1, t2), q) == apply(t1, apply(t2, q))
MoebiusTransform moebius_compose(const MoebiusTransform& t1, const MoebiusTransform& t2);
MoebiusTransform moebius_invert(const MoebiusTransform& t);

/// d Z / d z at a finite point whose image is finite.
Complex moebius_derivative(const MoebiusTransform& t, Complex z);

}  // namespace celestial
