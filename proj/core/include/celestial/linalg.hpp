#pragma once

// Small fixed-size dense matrices. Row-major, value types, no allocation.

#include <array>
#include <cmath>
#include <cstddef>

namespace celestial {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

using Matrix3 = Matrix<3>;
using Matrix4 = Matrix<4>;
using Vector3 = std::array<double, 3>;

template <std::size_t N>
constexpr Matrix<N> identity() {
  Matrix<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
  return m;
}

template <std::size_t N>
constexpr Matrix<N> operator*(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

template <std::size_t N>
constexpr Matrix<N> transpose(const Matrix<N>& m) {
  Matrix<N> out{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = m[j][i];
  return out;
}

/// Largest absolute entry of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::fmax(worst, std::fabs(a[i][j] - b[i][j]));
  return worst;
}

template <std::size_t N>
bool all_finite(const Matrix<N>& m) {
  for (const auto& row : m)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

inline double det(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline double det(const Matrix4& m) {
  // Laplace expansion along the first row.
  double total = 0.0;
  for (std::size_t col = 0; col < 4; ++col) {
    Matrix3 minor{};
    for (std::size_t i = 1; i < 4; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j == col) continue;
        minor[i - 1][c++] = m[i][j];
      }
    }
    const double sign = (col % 2 == 0) ? 1.0 : -1.0;
    total += sign * m[0][col] * det(minor);
  }
  return total;
}

inline Vector3 operator*(const Matrix3& m, const Vector3& v) {
  Vector3 out{};
  for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

inline double dot(const Vector3& a, const Vector3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vector3& v) { return std::hypot(v[0], v[1], v[2]); }

inline Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Max-norm residual of R^T R - I together with |det R - 1|.
inline double rotation_residual(const Matrix3& r) {
  return std::fmax(max_abs_diff(transpose(r) * r, identity<3>()), std::fabs(det(r) - 1.0));
}

}  // namespace celestial
