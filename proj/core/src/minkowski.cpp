#include "celestial/minkowski.hpp"

#include <algorithm>
#include <cmath>

#include "celestial/errors.hpp"

namespace celestial {

bool FourVector::is_finite() const {
  return std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); });
}

double interval_squared(const FourVector& dx) {
  return -dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2] + dx[3] * dx[3];
}

std::string_view to_string(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::ProperOrthochronous:
      return "ProperOrthochronous";
    case ComponentLabel::ProperAntichronous:
      return "ProperAntichronous";
    case ComponentLabel::ImproperOrthochronous:
      return "ImproperOrthochronous";
    case ComponentLabel::ImproperAntichronous:
      return "ImproperAntichronous";
  }
  return "Unknown";
}

double lorentz_residual(const Matrix4& m) {
  if (!all_finite(m)) return INFINITY;
  return max_abs_diff(transpose(m) * kMinkowskiMetric * m, kMinkowskiMetric);
}

LorentzMatrix::LorentzMatrix() : m_(identity<4>()), tol_(kDefaultLorentzTol) {}

LorentzMatrix LorentzMatrix::validate(const Matrix4& m, double tol) {
  if (!(tol > 0.0)) throw DomainError("validation tolerance must be positive");
  const double residual = lorentz_residual(m);
  if (!(residual <= tol)) throw NotLorentz(residual);
  return LorentzMatrix(m, tol);
}

ComponentLabel LorentzMatrix::component() const {
  // For a valid matrix det is +-1 and |L00| >= 1, so the signs are robust.
  const bool proper = det(m_) > 0.0;
  const bool orthochronous = m_[0][0] > 0.0;
  if (proper) return orthochronous ? ComponentLabel::ProperOrthochronous : ComponentLabel::ProperAntichronous;
  return orthochronous ? ComponentLabel::ImproperOrthochronous : ComponentLabel::ImproperAntichronous;
}

LorentzMatrix LorentzMatrix::inverse() const {
  return LorentzMatrix(kMinkowskiMetric * transpose(m_) * kMinkowskiMetric, tol_);
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
  return LorentzMatrix::validate(a.m_ * b.m_, std::fmax(a.tol_, b.tol_));
}

LorentzMatrix validate_lorentz(const Matrix4& m, double tol) { return LorentzMatrix::validate(m, tol); }

ComponentLabel classify_component(const LorentzMatrix& lambda) { return lambda.component(); }

FourVector apply(const LorentzMatrix& lambda, const FourVector& x) {
  const Matrix4& m = lambda.matrix();
  FourVector out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2] + m[i][3] * x[3];
  return out;
}

FourVector PoincareTransform::apply(const FourVector& x) const {
  return celestial::apply(lorentz, x) + translation;
}

PoincareTransform PoincareTransform::inverse() const {
  const LorentzMatrix inv = lorentz.inverse();
  return {inv, -celestial::apply(inv, translation)};
}

PoincareTransform poincare_compose(const PoincareTransform& g, const PoincareTransform& h) {
  return {g.lorentz * h.lorentz, g.translation + apply(g.lorentz, h.translation)};
}

namespace {

void check_speed(double v) {
  if (!(std::fabs(v) < 1.0)) throw SpeedLimit(v);
}

}  // namespace

double gamma(double v) {
  check_speed(v);
  // (1 - v)(1 + v) keeps precision close to |v| = 1.
  return 1.0 / std::sqrt((1.0 - v) * (1.0 + v));
}

Rapidity rapidity_from_velocity(double v) {
  check_speed(v);
  return {std::atanh(v)};
}

double velocity_from_rapidity(Rapidity chi) { return std::tanh(chi.chi); }

double add_velocities(double v, double w) {
  check_speed(v);
  check_speed(w);
  return (v + w) / (1.0 + v * w);
}

LorentzMatrix boost_x(Rapidity chi) {
  const double ch = std::cosh(chi.chi);
  const double sh = std::sinh(chi.chi);
  Matrix4 m = identity<4>();
  m[0][0] = ch;
  m[0][1] = -sh;
  m[1][0] = -sh;
  m[1][1] = ch;
  // Large rapidities inflate the absolute residual; scale the tolerance with cosh^2.
  return LorentzMatrix::validate(m, kDefaultLorentzTol * std::fmax(1.0, ch * ch));
}

Matrix3 rotation_taking_e1_to(const Vector3& n) {
  const double len = norm(n);
  if (!(std::fabs(len - 1.0) <= 1e-12)) throw BadAxis(len);
  // Gram-Schmidt with seeds e2 then e3; a seed nearly parallel to n is skipped.
  const Vector3 seeds[2] = {{0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
  Vector3 second{};
  for (const Vector3& seed : seeds) {
    const double proj = dot(seed, n);
    Vector3 cand{seed[0] - proj * n[0], seed[1] - proj * n[1], seed[2] - proj * n[2]};
    const double cn = norm(cand);
    if (cn > 1e-6) {
      second = {cand[0] / cn, cand[1] / cn, cand[2] / cn};
      break;
    }
  }
  const Vector3 third = cross(n, second);
  return {{{n[0], second[0], third[0]}, {n[1], second[1], third[1]}, {n[2], second[2], third[2]}}};
}

LorentzMatrix boost_axis(const Vector3& n, Rapidity chi) {
  const Matrix3 r = rotation_taking_e1_to(n);
  const LorentzMatrix rot = rotation_embed(r);
  const LorentzMatrix b = boost_x(chi);
  const Matrix4 m = rot.matrix() * b.matrix() * transpose(rot.matrix());
  return LorentzMatrix::validate(m, b.tol());
}

LorentzMatrix rotation_embed(const Matrix3& r) {
  const double residual = all_finite(r) ? rotation_residual(r) : INFINITY;
  if (!(residual <= 1e-9)) throw NotRotation(residual);
  Matrix4 m = identity<4>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i + 1][j + 1] = r[i][j];
  return LorentzMatrix::validate(m);
}

LorentzMatrix parity() {
  Matrix4 m = identity<4>();
  m[1][1] = m[2][2] = m[3][3] = -1.0;
  return LorentzMatrix::validate(m);
}

LorentzMatrix time_reversal() {
  Matrix4 m = identity<4>();
  m[0][0] = -1.0;
  return LorentzMatrix::validate(m);
}

Rapidity integrate_proper_acceleration(std::span<const double> accel, double proper_time) {
  if (accel.size() < 2) throw DomainError("need at least two acceleration samples");
  if (!std::isfinite(proper_time) || proper_time < 0.0) throw DomainError("proper time must be finite and >= 0");
  const double h = proper_time / static_cast<double>(accel.size() - 1);
  double sum = 0.5 * (accel.front() + accel.back());
  for (std::size_t i = 1; i + 1 < accel.size(); ++i) sum += accel[i];
  const double chi = h * sum;
  if (!std::isfinite(chi)) throw DomainError("acceleration samples must be finite");
  return {chi};
}

Rapidity integrate_proper_acceleration(std::span<const double> tau, std::span<const double> accel) {
  if (tau.size() != accel.size()) throw DomainError("sample times and accelerations differ in length");
  if (tau.size() < 2) throw DomainError("need at least two acceleration samples");
  double chi = 0.0;
  for (std::size_t i = 1; i < tau.size(); ++i) {
    const double h = tau[i] - tau[i - 1];
    if (h < 0.0) throw DomainError("sample times must be non-decreasing");
    chi += 0.5 * h * (accel[i] + accel[i - 1]);
  }
  if (!std::isfinite(chi)) throw DomainError("acceleration samples must be finite");
  return {chi};
}

}  // namespace celestial
