// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace movwall {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested quantity is undefined at a degenerate boundary parameter
/// (eta = +1 or -1).
class SingularParameter : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical procedure failed to produce an answer.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Particle mass in units with hbar = 1.
class MassConvention {
 public:
  MassConvention() = default;
  explicit MassConvention(double m) : m_(m) {
    if (!(m > 0.0)) throw InvalidArgument("mass must be positive");
  }
  [[nodiscard]] double mass() const noexcept { return m_; }

 private:
  double m_ = 1.0;
};

/// Box I_{l,c} = [c - l/2, c + l/2]; a point of the (l, c) half-plane.
class Geometry {
 public:
  Geometry() = default;
  Geometry(double l, double c) : l_(l), c_(c) {
    if (!(l > 0.0)) throw InvalidArgument("box length l must be positive");
  }
  [[nodiscard]] double l() const noexcept { return l_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] double left() const noexcept { return c_ - 0.5 * l_; }
  [[nodiscard]] double right() const noexcept { return c_ + 0.5 * l_; }

 private:
  double l_ = 1.0;
  double c_ = 0.0;
};

inline Mat2 pauli_x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline Mat2 pauli_y() {
  Mat2 m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

inline Mat2 pauli_z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

}  // namespace movwall
