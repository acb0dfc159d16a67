#include "celestial/decomposition.hpp"

#include <cmath>
#include <string>

#include "celestial/errors.hpp"

namespace celestial {
namespace {

void require_proper_orthochronous(const LorentzMatrix& lambda) {
  const ComponentLabel label = lambda.component();
  if (label != ComponentLabel::ProperOrthochronous) throw WrongComponent(std::string(to_string(label)));
}

Vector3 boost_column(const Matrix4& m) { return {m[1][0], m[2][0], m[3][0]}; }

Matrix3 spatial_block(const Matrix4& m) {
  Matrix3 r{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = m[i + 1][j + 1];
  return r;
}

Vector3 unit(const Vector3& v) {
  const double n = norm(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

// Orthonormal, positively oriented triad whose first member is e1. The other
// two come from Gram-Schmidt against the canonical axes in index order.
Matrix3 triad_rows(const Vector3& e1) {
  Vector3 found[2]{};
  std::size_t count = 0;
  for (std::size_t axis = 0; axis < 3 && count < 2; ++axis) {
    Vector3 cand{};
    cand[axis] = 1.0;
    const Vector3 basis[3] = {e1, found[0], found[1]};
    for (std::size_t k = 0; k <= count; ++k) {
      const double p = dot(cand, basis[k]);
      for (std::size_t i = 0; i < 3; ++i) cand[i] -= p * basis[k][i];
    }
    const double n = norm(cand);
    if (n <= 1e-6) continue;
    found[count++] = {cand[0] / n, cand[1] / n, cand[2] / n};
  }
  Matrix3 rows{{e1, found[0], found[1]}};
  if (det(rows) < 0.0) {
    for (double& v : rows[2]) v = -v;
  }
  return rows;
}

// Re-orthonormalize a nearly orthogonal pair of unit rows; the result is
// exactly orthogonal to rounding so the completed rotation stays in SO(3).
Matrix3 frame_from_rows(const Vector3& f2_raw, const Vector3& f3_raw) {
  const Vector3 f2 = unit(f2_raw);
  const double p = dot(f3_raw, f2);
  const Vector3 f3 = unit({f3_raw[0] - p * f2[0], f3_raw[1] - p * f2[1], f3_raw[2] - p * f2[2]});
  const Vector3 f1 = cross(f2, f3);
  // Columns f1, f2, f3.
  return {{{f1[0], f2[0], f3[0]}, {f1[1], f2[1], f3[1]}, {f1[2], f2[2], f3[2]}}};
}

}  // namespace

StandardDecomposition standard_decompose(const LorentzMatrix& lambda) {
  require_proper_orthochronous(lambda);
  const Matrix4& m = lambda.matrix();
  const Vector3 a = boost_column(m);
  const double a_norm = norm(a);

  if (a_norm <= 1e-12) {
    // Pure rotation: R1 = 1, chi = 0, R2 = spatial block.
    return {identity<3>(), Rapidity{0.0}, spatial_block(m)};
  }

  // e1 = -a/|a| makes the boosted block come out as boost_x(+chi).
  const Vector3 e1{-a[0] / a_norm, -a[1] / a_norm, -a[2] / a_norm};
  const Matrix3 rbar1 = triad_rows(e1);

  Matrix4 rbar1_4 = identity<4>();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rbar1_4[i + 1][j + 1] = rbar1[i][j];
  const Matrix4 left = rbar1_4 * m;

  const Vector3 mu{left[2][1], left[2][2], left[2][3]};
  const Vector3 nu{left[3][1], left[3][2], left[3][3]};
  const Matrix3 rbar2 = frame_from_rows(mu, nu);

  // R1 = rbar1^-1, R2 = rbar2^-1.
  return {transpose(rbar1), Rapidity{std::asinh(a_norm)}, transpose(rbar2)};
}

LorentzMatrix recompose(const StandardDecomposition& d) {
  const LorentzMatrix b = boost_x(d.chi);
  const Matrix4 m = rotation_embed(d.r1).matrix() * b.matrix() * rotation_embed(d.r2).matrix();
  return LorentzMatrix::validate(m, b.tol());
}

Rapidity rapidity_of(const LorentzMatrix& lambda) {
  require_proper_orthochronous(lambda);
  const Matrix4& m = lambda.matrix();
  const double a_norm = norm(boost_column(m));
  return {a_norm <= 1e-12 ? 0.0 : std::asinh(a_norm)};
}

}  // namespace celestial
