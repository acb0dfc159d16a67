#include "celestial/riemann_sphere.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "celestial/errors.hpp"

namespace celestial {

SpherePoint::SpherePoint() : z1_(0.0), z2_(1.0) {}

SpherePoint SpherePoint::homogeneous(Complex z1, Complex z2) {
  if (!std::isfinite(z1.real()) || !std::isfinite(z1.imag()) || !std::isfinite(z2.real()) ||
      !std::isfinite(z2.imag()))
    throw DomainError("homogeneous coordinates must be finite");
  // Rescale by the larger modulus first so the norm cannot overflow.
  const double big = std::fmax(std::abs(z1), std::abs(z2));
  if (big == 0.0) throw DomainError("homogeneous coordinates must not both vanish");
  double n = std::hypot(std::abs(z1), std::abs(z2));
  // Already normalized input is left bit-for-bit unchanged.
  if (std::fabs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return SpherePoint(z1, z2);
  z1 /= big;
  z2 /= big;
  n = std::hypot(std::abs(z1), std::abs(z2));
  return SpherePoint(z1 / n, z2 / n);
}

SpherePoint SpherePoint::from_complex(Complex z) { return homogeneous(z, 1.0); }

SpherePoint SpherePoint::infinity() { return SpherePoint(1.0, 0.0); }

Complex SpherePoint::value() const {
  if (is_infinity()) throw InfinityPoint();
  return z1_ / z2_;
}

bool SpherePoint::same_as(const SpherePoint& other, double tol) const { return distance(other) <= tol; }

double SpherePoint::distance(const SpherePoint& other) const {
  return std::abs(z1_ * other.z2_ - z2_ * other.z1_);
}

SpherePoint from_polar(const PolarAngles& p) {
  if (!(p.theta >= 0.0 && p.theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
  if (!std::isfinite(p.phi)) throw DomainError("phi must be finite");
  if (p.theta == std::numbers::pi) return SpherePoint::infinity();
  const double half = 0.5 * p.theta;
  return SpherePoint::homogeneous(std::polar(std::sin(half), p.phi), std::cos(half));
}

PolarAngles to_polar(const SpherePoint& q) {
  const double theta = 2.0 * std::atan2(std::abs(q.z1()), std::abs(q.z2()));
  if (std::abs(q.z1()) == 0.0 || q.is_infinity()) return {theta, 0.0};
  double phi = std::arg(q.z1() * std::conj(q.z2()));
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return {theta, phi};
}

SpherePoint stereo_project(double x1, double x2, double x3, double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radius must be positive and finite");
  const double residual = std::fabs(x1 * x1 + x2 * x2 + x3 * x3 - r * r);
  if (!(residual <= 1e-9 * r * r)) throw NotOnSphere(residual / (r * r));
  // In the southern hemisphere use z = (r - x3) / (x1 - i x2), which avoids
  // the cancellation in r + x3.
  if (x3 >= 0.0) return SpherePoint::homogeneous(Complex(x1, x2), r + x3);
  return SpherePoint::homogeneous(r - x3, Complex(x1, -x2));
}

std::array<double, 3> inverse_stereo(const SpherePoint& q, double r) {
  // z / (1 + |z|^2) = z1 conj(z2) for normalized coordinates.
  const Complex w = 2.0 * r * q.z1() * std::conj(q.z2());
  return {w.real(), w.imag(), r * (std::norm(q.z2()) - std::norm(q.z1()))};
}

double sphere_metric_factor(const SpherePoint& q, double r) {
  if (q.is_infinity()) throw InfinityPoint();
  const double s = std::norm(q.z2());
  return 4.0 * r * r * s * s;
}

SpherePoint antipode(const SpherePoint& q) {
  return SpherePoint::homogeneous(-std::conj(q.z2()), std::conj(q.z1()));
}

MoebiusTransform MoebiusTransform::translation(Complex b) { return MoebiusTransform(SL2CElement(1.0, b, 0.0, 1.0)); }

MoebiusTransform MoebiusTransform::rotation(double theta) {
  return MoebiusTransform(SL2CElement(std::polar(1.0, -0.5 * theta), 0.0, 0.0, std::polar(1.0, 0.5 * theta)));
}

MoebiusTransform MoebiusTransform::dilation(double chi) {
  return MoebiusTransform(SL2CElement(std::exp(-0.5 * chi), 0.0, 0.0, std::exp(0.5 * chi)));
}

MoebiusTransform MoebiusTransform::special(Complex b) {
  if (b == 0.0) throw DomainError("special conformal parameter must be non-zero");
  return MoebiusTransform(SL2CElement(0.0, b, -1.0 / b, 0.0));
}

SpherePoint moebius_apply(const MoebiusTransform& t, const SpherePoint& q) {
  const SL2CElement& s = t.matrix();
  return SpherePoint::homogeneous(s.a() * q.z1() + s.b() * q.z2(), s.c() * q.z1() + s.d() * q.z2());
}

MoebiusTransform moebius_compose(const MoebiusTransform& t1, const MoebiusTransform& t2) {
  return MoebiusTransform(t1.matrix() * t2.matrix());
}

MoebiusTransform moebius_invert(const MoebiusTransform& t) { return MoebiusTransform(t.matrix().inverse()); }

Complex moebius_derivative(const MoebiusTransform& t, Complex z) {
  // (ad - bc) / (cz + d)^2 with ad - bc = 1.
  const SL2CElement& s = t.matrix();
  const Complex den = s.c() * z + s.d();
  return 1.0 / (den * den);
}

}  // namespace celestial
