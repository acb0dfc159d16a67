#pragma once

// Four-vectors, the Minkowski interval, Lorentz matrices and their four
// connected components, boosts, rapidity, and Poincare composition.
//
// Conventions: signature (-,+,+,+), x0 = ct, velocities in units of c.

#include <array>
#include <span>
#include <string_view>

#include "celestial/linalg.hpp"

namespace celestial {

inline constexpr double kDefaultLorentzTol = 1e-9;

struct FourVector {
  std::array<double, 4> x{};

  constexpr double operator[](std::size_t i) const { return x[i]; }
  constexpr double& operator[](std::size_t i) { return x[i]; }

  bool is_finite() const;

  friend constexpr FourVector operator+(const FourVector& a, const FourVector& b) {
    return {{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}};
  }
  friend constexpr FourVector operator-(const FourVector& a, const FourVector& b) {
    return {{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]}};
  }
  friend constexpr FourVector operator-(const FourVector& a) { return {{-a[0], -a[1], -a[2], -a[3]}}; }
  friend constexpr FourVector operator*(double s, const FourVector& a) {
    return {{s * a[0], s * a[1], s * a[2], s * a[3]}};
  }
  friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

/// diag(-1, 1, 1, 1)
inline constexpr Matrix4 kMinkowskiMetric{{{-1.0, 0.0, 0.0, 0.0},
                                           {0.0, 1.0, 0.0, 0.0},
                                           {0.0, 0.0, 1.0, 0.0},
                                           {0.0, 0.0, 0.0, 1.0}}};

/// -dx0^2 + dx1^2 + dx2^2 + dx3^2
double interval_squared(const FourVector& dx);

/// Dimensionless additive boost parameter.
struct Rapidity {
  double chi = 0.0;
  friend constexpr bool operator==(const Rapidity&, const Rapidity&) = default;
};

enum class ComponentLabel {
  ProperOrthochronous,
  ProperAntichronous,
  ImproperOrthochronous,
  ImproperAntichronous,
};

std::string_view to_string(ComponentLabel label);

/// Max-norm of M^T eta M - eta.
double lorentz_residual(const Matrix4& m);

/// A 4x4 real matrix known to preserve the Minkowski metric within `tol()`.
/// The only way to obtain one from arbitrary entries is `validate`.
class LorentzMatrix {
 public:
  LorentzMatrix();  // identity

  /// Throws NotLorentz when the residual exceeds tol, DomainError when tol <= 0.
  static LorentzMatrix validate(const Matrix4& m, double tol = kDefaultLorentzTol);

  const Matrix4& matrix() const noexcept { return m_; }
  double tol() const noexcept { return tol_; }
  double operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }

  ComponentLabel component() const;
  double residual() const { return lorentz_residual(m_); }

  /// eta Lambda^T eta
  LorentzMatrix inverse() const;

  /// The product is re-validated at the looser of the two tolerances.
  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);

 private:
  LorentzMatrix(const Matrix4& m, double tol) : m_(m), tol_(tol) {}
  Matrix4 m_;
  double tol_;
};

LorentzMatrix validate_lorentz(const Matrix4& m, double tol = kDefaultLorentzTol);

ComponentLabel classify_component(const LorentzMatrix& lambda);

FourVector apply(const LorentzMatrix& lambda, const FourVector& x);

/// x -> Lambda x + a
struct PoincareTransform {
  LorentzMatrix lorentz;
  FourVector translation;

  FourVector apply(const FourVector& x) const;
  PoincareTransform inverse() const;
};

/// (L, a) . (L', a') = (L L', a + L a')
PoincareTransform poincare_compose(const PoincareTransform& g, const PoincareTransform& h);

// Velocity and rapidity calculus. All velocities are fractions of c and must
// satisfy |v| < 1; otherwise SpeedLimit is thrown.
double gamma(double v);
Rapidity rapidity_from_velocity(double v);
double velocity_from_rapidity(Rapidity chi);
double add_velocities(double v, double w);

/// Standard boost along x1; entries (cosh, -sinh) in the 0-1 block.
LorentzMatrix boost_x(Rapidity chi);

/// Boost along the unit axis n, built as R boost_x(chi) R^T with R e1 = n.
/// Throws BadAxis when | |n| - 1 | > 1e-12.
LorentzMatrix boost_axis(const Vector3& n, Rapidity chi);

/// diag(1, R). Throws NotRotation unless R is orthogonal with det +1 (1e-9).
LorentzMatrix rotation_embed(const Matrix3& r);

/// Deterministic rotation taking e1 to the unit vector n (columns n, e2', e3').
Matrix3 rotation_taking_e1_to(const Vector3& n);

LorentzMatrix parity();
LorentzMatrix time_reversal();

/// Trapezoidal integral of proper acceleration (units of c per unit proper
/// time) over uniformly spaced samples spanning [0, proper_time]. Needs at
/// least two samples.
Rapidity integrate_proper_acceleration(std::span<const double> accel, double proper_time);

/// Same, over explicit sample times. Repeated times are allowed, which lets
/// a step discontinuity be represented exactly.
Rapidity integrate_proper_acceleration(std::span<const double> tau, std::span<const double> accel);

}  // namespace celestial
