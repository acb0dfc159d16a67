#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace celestial {

/// Base for every validation failure raised by the library. The CLI maps these
/// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix fails the eta-orthogonality check; carries the max-norm residual.
class NotLorentz : public Error {
 public:
  explicit NotLorentz(double residual);
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class SpeedLimit : public Error {
 public:
  explicit SpeedLimit(double v);
};

class BadAxis : public Error {
 public:
  explicit BadAxis(double norm);
};

class NotRotation : public Error {
 public:
  explicit NotRotation(double residual);
};

class WrongComponent : public Error {
 public:
  explicit WrongComponent(const std::string& found);
};

class NotSpecialLinear : public Error {
 public:
  explicit NotSpecialLinear(double det_residual);
};

class NotHermitian : public Error {
 public:
  explicit NotHermitian(double residual);
};

class NotOnSphere : public Error {
 public:
  explicit NotOnSphere(double residual);
};

class InfinityPoint : public Error {
 public:
  InfinityPoint();
};

class OriginDirectionUndefined : public Error {
 public:
  OriginDirectionUndefined();
};

class NotNull : public Error {
 public:
  explicit NotNull(double residual);
};

class NotOrthochronous : public Error {
 public:
  NotOrthochronous();
};

/// A precondition on a scalar argument (angle range, sample count, ...) failed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed catalog input. `line` is 1-based and counts the header.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  RangeError(std::size_t line, const std::string& reason);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace celestial
