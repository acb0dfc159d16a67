#include "celestial/errors.hpp"

#include <cstdio>

namespace celestial {
namespace {

std::string with_value(const char* what, double value) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s %.6g", what, value);
  return buf;
}

}  // namespace

NotLorentz::NotLorentz(double residual)
    : Error(with_value("not a Lorentz matrix: residual", residual)), residual_(residual) {}

SpeedLimit::SpeedLimit(double v) : Error(with_value("speed limit violated: |v| >= 1, v =", v)) {}

BadAxis::BadAxis(double norm) : Error(with_value("axis is not a unit vector: norm", norm)) {}

NotRotation::NotRotation(double residual)
    : Error(with_value("not a proper rotation: residual", residual)) {}

WrongComponent::WrongComponent(const std::string& found)
    : Error("expected a proper orthochronous matrix, found " + found) {}

NotSpecialLinear::NotSpecialLinear(double det_residual)
    : Error(with_value("determinant differs from 1 by", det_residual)) {}

NotHermitian::NotHermitian(double residual)
    : Error(with_value("matrix is not Hermitian: residual", residual)) {}

NotOnSphere::NotOnSphere(double residual)
    : Error(with_value("point is not on the sphere: residual", residual)) {}

InfinityPoint::InfinityPoint() : Error("operation undefined at the point at infinity") {}

OriginDirectionUndefined::OriginDirectionUndefined()
    : Error("direction undefined at the spatial origin") {}

NotNull::NotNull(double residual) : Error(with_value("momentum is not null: residual", residual)) {}

NotOrthochronous::NotOrthochronous() : Error("transformation reverses the direction of time") {}

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

RangeError::RangeError(std::size_t line, const std::string& reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}

}  // namespace celestial
