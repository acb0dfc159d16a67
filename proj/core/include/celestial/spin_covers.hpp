#pragma once

// The double covers SU(2) -> SO(3), SL(2,R) -> SO(2,1)+, SL(2,C) -> SO(3,1)+,
// and the section lifting a proper orthochronous Lorentz matrix back to
// SL(2,C) up to sign.
//
// Four-vectors are identified with 2x2 Hermitian matrices through the basis
// tau0 = 1, tau1 = -sigma1, tau2 = sigma2, tau3 = sigma3:
//
//   X = [[x0 + x3, -x1 - i x2], [-x1 + i x2, x0 - x3]],  det X = -x.x
//
// The sign of tau1 makes the induced action on the celestial sphere the plain
// Moebius map z -> (a z + b) / (c z + d).

#include <array>
#include <complex>

#include "celestial/linalg.hpp"
#include "celestial/minkowski.hpp"

namespace celestial {

using Complex = std::complex<double>;

/// Row-major complex 2x2 matrix.
struct Matrix2c {
  std::array<Complex, 4> e{};

  Complex operator()(std::size_t r, std::size_t c) const { return e[2 * r + c]; }
  Complex& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }

  Complex det() const { return e[0] * e[3] - e[1] * e[2]; }
  Matrix2c dagger() const;

  friend Matrix2c operator*(const Matrix2c& a, const Matrix2c& b);
  friend Matrix2c operator+(const Matrix2c& a, const Matrix2c& b);
  friend Matrix2c operator*(Complex s, const Matrix2c& a);
};

double max_abs_diff(const Matrix2c& a, const Matrix2c& b);

inline constexpr double kDetTol = 1e-9;
inline constexpr double kHermitianTol = 1e-12;

/// Complex 2x2 matrix with ad - bc = 1 (within 1e-9).
class SL2CElement {
 public:
  SL2CElement();  // identity
  /// Throws NotSpecialLinear.
  SL2CElement(Complex a, Complex b, Complex c, Complex d);

  Complex a() const { return m_.e[0]; }
  Complex b() const { return m_.e[1]; }
  Complex c() const { return m_.e[2]; }
  Complex d() const { return m_.e[3]; }
  const Matrix2c& matrix() const { return m_; }

  SL2CElement inverse() const;
  SL2CElement operator-() const;
  friend SL2CElement operator*(const SL2CElement& s, const SL2CElement& t);

  /// Representative of {S, -S} whose first entry (in the order a, b, c, d)
  /// larger than 1e-9 in modulus has positive real part, ties (|Re| <= 1e-9)
  /// broken by positive imaginary part.
  SL2CElement canonical_sign() const;

 private:
  Matrix2c m_;
};

/// ((alpha, beta), (-conj(beta), conj(alpha))) with |alpha|^2 + |beta|^2 = 1.
class SU2Element {
 public:
  SU2Element() : alpha_(1.0), beta_(0.0) {}
  /// Throws NotSpecialLinear when |alpha|^2 + |beta|^2 is off by more than 1e-10.
  SU2Element(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  SL2CElement as_sl2c() const;
  SU2Element operator-() const { return SU2Element(-alpha_, -beta_); }
  friend SU2Element operator*(const SU2Element& u, const SU2Element& v);

 private:
  Complex alpha_, beta_;
};

class SL2RElement {
 public:
  SL2RElement() = default;
  /// Throws NotSpecialLinear.
  SL2RElement(double a, double b, double c, double d);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }
  SL2RElement operator-() const { return SL2RElement(-a_, -b_, -c_, -d_); }
  friend SL2RElement operator*(const SL2RElement& s, const SL2RElement& t);

 private:
  double a_ = 1.0, b_ = 0.0, c_ = 0.0, d_ = 1.0;
};

/// A 2x2 Hermitian matrix standing for a four-vector.
class HermitianSlot {
 public:
  /// Throws NotHermitian when the Hermiticity residual exceeds 1e-12.
  explicit HermitianSlot(const Matrix2c& m);
  const Matrix2c& matrix() const { return m_; }

 private:
  Matrix2c m_;
};

HermitianSlot hermitian_from_four_vector(const FourVector& x);
FourVector four_vector_from_hermitian(const HermitianSlot& x);

/// Closed-form quadratic map; f(S) x is the four-vector of S X(x) S^dagger.
LorentzMatrix sl2c_to_lorentz(const SL2CElement& s);

/// Rotation with U sigma_j U^dagger = R_ij sigma_i (Pauli basis).
Matrix3 su2_to_so3(const SU2Element& u);

/// Matrix of S t_mu S^-1 = t_nu f^nu_mu with t0 = ((0,1),(-1,0)),
/// t1 = ((0,1),(1,0)), t2 = ((1,0),(0,-1)); preserves diag(-1, 1, 1).
Matrix3 sl2r_to_so21(const SL2RElement& s);

/// cos(phi/2) - i sin(phi/2) n.sigma; maps under su2_to_so3 to the
/// right-handed rotation by phi about n. Throws BadAxis.
SU2Element su2_from_axis_angle(const Vector3& n, double phi);

/// One of the two SU(2) preimages of a rotation under su2_to_so3.
SU2Element su2_from_rotation(const Matrix3& r);

/// One of the two preimages under sl2c_to_lorentz, in canonical sign.
/// Throws WrongComponent unless lambda is proper orthochronous.
SL2CElement lift_lorentz_to_sl2c(const LorentzMatrix& lambda);

}  // namespace celestial
