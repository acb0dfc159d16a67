#include "celestial/spin_covers.hpp"

#include <cmath>

#include "celestial/decomposition.hpp"
#include "celestial/errors.hpp"

namespace celestial {

Matrix2c Matrix2c::dagger() const {
  return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
}

Matrix2c operator*(const Matrix2c& a, const Matrix2c& b) {
  return {{a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
           a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]}};
}

Matrix2c operator+(const Matrix2c& a, const Matrix2c& b) {
  return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]}};
}

Matrix2c operator*(Complex s, const Matrix2c& a) {
  return {{s * a.e[0], s * a.e[1], s * a.e[2], s * a.e[3]}};
}

double max_abs_diff(const Matrix2c& a, const Matrix2c& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::fmax(worst, std::abs(a.e[i] - b.e[i]));
  return worst;
}

// ---------------------------------------------------------------------------

SL2CElement::SL2CElement() : m_{{1.0, 0.0, 0.0, 1.0}} {}

SL2CElement::SL2CElement(Complex a, Complex b, Complex c, Complex d) : m_{{a, b, c, d}} {
  const double residual = std::abs(m_.det() - 1.0);
  if (!(residual <= kDetTol)) throw NotSpecialLinear(residual);
}

SL2CElement SL2CElement::inverse() const {
  SL2CElement out;
  out.m_ = {{d(), -b(), -c(), a()}};
  return out;
}

SL2CElement SL2CElement::operator-() const {
  SL2CElement out;
  out.m_ = Complex(-1.0) * m_;
  return out;
}

SL2CElement operator*(const SL2CElement& s, const SL2CElement& t) {
  // det(ST) = det S det T, so no re-validation.
  SL2CElement out;
  out.m_ = s.m_ * t.m_;
  return out;
}

SL2CElement SL2CElement::canonical_sign() const {
  constexpr double kZero = 1e-9;
  for (const Complex& v : m_.e) {
    if (std::abs(v) <= kZero) continue;
    if (v.real() > kZero) return *this;
    if (v.real() < -kZero) return -*this;
    return v.imag() > 0.0 ? *this : -*this;
  }
  return *this;  // unreachable for det = 1
}

SU2Element::SU2Element(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
  const double residual = std::fabs(std::norm(alpha) + std::norm(beta) - 1.0);
  if (!(residual <= 1e-10)) throw NotSpecialLinear(residual);
}

SL2CElement SU2Element::as_sl2c() const {
  return SL2CElement(alpha_, beta_, -std::conj(beta_), std::conj(alpha_));
}

SU2Element operator*(const SU2Element& u, const SU2Element& v) {
  // First row of the product; the second row follows from the SU(2) form.
  return SU2Element(u.alpha_ * v.alpha_ - u.beta_ * std::conj(v.beta_),
                    u.alpha_ * v.beta_ + u.beta_ * std::conj(v.alpha_));
}

SL2RElement::SL2RElement(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
  const double residual = std::fabs(a * d - b * c - 1.0);
  if (!(residual <= kDetTol)) throw NotSpecialLinear(residual);
}

SL2RElement operator*(const SL2RElement& s, const SL2RElement& t) {
  SL2RElement out;
  out.a_ = s.a_ * t.a_ + s.b_ * t.c_;
  out.b_ = s.a_ * t.b_ + s.b_ * t.d_;
  out.c_ = s.c_ * t.a_ + s.d_ * t.c_;
  out.d_ = s.c_ * t.b_ + s.d_ * t.d_;
  return out;
}

// ---------------------------------------------------------------------------

HermitianSlot::HermitianSlot(const Matrix2c& m) : m_(m) {
  const double residual = max_abs_diff(m, m.dagger());
  if (!(residual <= kHermitianTol)) throw NotHermitian(residual);
}

HermitianSlot hermitian_from_four_vector(const FourVector& x) {
  return HermitianSlot(Matrix2c{{Complex(x[0] + x[3], 0.0), Complex(-x[1], -x[2]),
                                 Complex(-x[1], x[2]), Complex(x[0] - x[3], 0.0)}});
}

FourVector four_vector_from_hermitian(const HermitianSlot& slot) {
  const Matrix2c& m = slot.matrix();
  const double p = m.e[0].real();
  const double q = m.e[3].real();
  // Average the two off-diagonal slots so the map ignores the anti-Hermitian part.
  const Complex off = 0.5 * (m.e[2] + std::conj(m.e[1]));
  return {{0.5 * (p + q), -off.real(), off.imag(), 0.5 * (p - q)}};
}

LorentzMatrix sl2c_to_lorentz(const SL2CElement& s) {
  const Complex a = s.a(), b = s.b(), c = s.c(), d = s.d();
  const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c), nd = std::norm(d);
  const Complex ab_cd_sum = a * std::conj(b) + c * std::conj(d);
  const Complex ab_cd_diff = a * std::conj(b) - c * std::conj(d);
  const Complex ac_bd_sum = std::conj(a) * c + std::conj(b) * d;
  const Complex ac_bd_diff = std::conj(a) * c - std::conj(b) * d;
  const Complex ad_bc_sum = std::conj(a) * d + std::conj(b) * c;
  const Complex ad_bc_diff = a * std::conj(d) - b * std::conj(c);

  const Matrix4 m{{
      {0.5 * (na + nb + nc + nd), -ab_cd_sum.real(), ab_cd_sum.imag(), 0.5 * (na - nb + nc - nd)},
      {-ac_bd_sum.real(), ad_bc_sum.real(), -ad_bc_diff.imag(), -ac_bd_diff.real()},
      {ac_bd_sum.imag(), -ad_bc_sum.imag(), ad_bc_diff.real(), ac_bd_diff.imag()},
      {0.5 * (na + nb - nc - nd), -ab_cd_diff.real(), ab_cd_diff.imag(), 0.5 * (na - nb - nc + nd)},
  }};
  // Rounding in the quadratic entries scales with their size.
  const double scale = m[0][0];
  return LorentzMatrix::validate(m, kDefaultLorentzTol * std::fmax(1.0, scale * scale));
}

Matrix3 su2_to_so3(const SU2Element& u) {
  const Complex a = u.alpha(), b = u.beta(), c = -std::conj(b), d = std::conj(a);
  const Complex p = std::conj(a) * d + std::conj(b) * c;
  const Complex q = a * std::conj(d) - b * std::conj(c);
  const Complex r = std::conj(a) * c - std::conj(b) * d;
  const Complex s = a * std::conj(b) - c * std::conj(d);
  return {{
      {p.real(), q.imag(), r.real()},
      {p.imag(), q.real(), r.imag()},
      {s.real(), s.imag(), 0.5 * (std::norm(a) - std::norm(b) - std::norm(c) + std::norm(d))},
  }};
}

Matrix3 sl2r_to_so21(const SL2RElement& s) {
  const double a = s.a(), b = s.b(), c = s.c(), d = s.d();
  return {{
      {0.5 * (a * a + b * b + c * c + d * d), 0.5 * (a * a - b * b + c * c - d * d), -a * b - c * d},
      {0.5 * (a * a + b * b - c * c - d * d), 0.5 * (a * a - b * b - c * c + d * d), -a * b + c * d},
      {-a * c - b * d, b * d - a * c, a * d + b * c},
  }};
}

namespace {

// U = w - i (x sigma1 + y sigma2 + z sigma3) for the unit quaternion (w, x, y, z).
SU2Element su2_from_quaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  return SU2Element(Complex(w, -z), Complex(-y, -x));
}

// diag(-1, 1, 1): the spatial part of the tau basis differs from the Pauli
// basis by the sign of the first axis.
Matrix3 flip_first_axis(const Matrix3& r) {
  Matrix3 out = r;
  for (std::size_t i = 0; i < 3; ++i) {
    out[0][i] = -out[0][i];
    out[i][0] = -out[i][0];
  }
  return out;
}

}  // namespace

SU2Element su2_from_axis_angle(const Vector3& n, double phi) {
  const double len = norm(n);
  if (!(std::fabs(len - 1.0) <= 1e-12)) throw BadAxis(len);
  const double c = std::cos(0.5 * phi);
  const double s = std::sin(0.5 * phi);
  return SU2Element(Complex(c, -s * n[2]), Complex(-s * n[1], -s * n[0]));
}

SU2Element su2_from_rotation(const Matrix3& r) {
  const double residual = all_finite(r) ? rotation_residual(r) : INFINITY;
  if (!(residual <= 1e-9)) throw NotRotation(residual);
  // Shepperd's method: branch on the largest of w^2, x^2, y^2, z^2.
  const double trace = r[0][0] + r[1][1] + r[2][2];
  if (trace >= r[0][0] && trace >= r[1][1] && trace >= r[2][2]) {
    const double w4 = 2.0 * std::sqrt(1.0 + trace);
    return su2_from_quaternion(0.25 * w4, (r[2][1] - r[1][2]) / w4, (r[0][2] - r[2][0]) / w4,
                               (r[1][0] - r[0][1]) / w4);
  }
  if (r[0][0] >= r[1][1] && r[0][0] >= r[2][2]) {
    const double x4 = 2.0 * std::sqrt(1.0 + r[0][0] - r[1][1] - r[2][2]);
    return su2_from_quaternion((r[2][1] - r[1][2]) / x4, 0.25 * x4, (r[0][1] + r[1][0]) / x4,
                               (r[0][2] + r[2][0]) / x4);
  }
  if (r[1][1] >= r[2][2]) {
    const double y4 = 2.0 * std::sqrt(1.0 + r[1][1] - r[0][0] - r[2][2]);
    return su2_from_quaternion((r[0][2] - r[2][0]) / y4, (r[0][1] + r[1][0]) / y4, 0.25 * y4,
                               (r[1][2] + r[2][1]) / y4);
  }
  const double z4 = 2.0 * std::sqrt(1.0 + r[2][2] - r[0][0] - r[1][1]);
  return su2_from_quaternion((r[1][0] - r[0][1]) / z4, (r[0][2] + r[2][0]) / z4, (r[1][2] + r[2][1]) / z4,
                             0.25 * z4);
}

SL2CElement lift_lorentz_to_sl2c(const LorentzMatrix& lambda) {
  const StandardDecomposition dec = standard_decompose(lambda);
  const SL2CElement u1 = su2_from_rotation(flip_first_axis(dec.r1)).as_sl2c();
  const SL2CElement u2 = su2_from_rotation(flip_first_axis(dec.r2)).as_sl2c();
  // cosh(chi/2) - sinh(chi/2) tau1 covers boost_x(chi).
  const double ch = std::cosh(0.5 * dec.chi.chi);
  const double sh = std::sinh(0.5 * dec.chi.chi);
  const SL2CElement boost(ch, sh, sh, ch);
  return (u1 * boost * u2).canonical_sign();
}

}  // namespace celestial
