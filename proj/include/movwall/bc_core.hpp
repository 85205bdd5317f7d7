// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

/// \file
/// Self-adjoint boundary conditions for -(1/2m) d^2/dx^2 on an interval [a, b].
///
/// Every self-adjoint extension is labelled by a 2x2 unitary U through
///
///     (I - U) (psi(a), psi(b))^T = i (I + U) (-psi'(a), psi'(b))^T.
///
/// The dilation-invariant subfamily psi(a) = eta psi(b), conj(eta) psi'(a) =
/// psi'(b) is parametrised by eta in the extended complex plane.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "movwall/common.hpp"

namespace movwall {

/// Point of the extended complex plane C u {inf}.
class EtaParameter {
 public:
  EtaParameter() = default;
  EtaParameter(Complex v);  // NOLINT(google-explicit-constructor)
  EtaParameter(double v) : EtaParameter(Complex(v, 0.0)) {}  // NOLINT

  static EtaParameter infinity() noexcept;

  /// Parses "a+bi", "a", "bi", "-i", ... or "inf".
  static EtaParameter parse(std::string_view text);

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; throws InvalidArgument for the point at infinity.
  [[nodiscard]] Complex value() const;
  [[nodiscard]] bool is_degenerate() const noexcept;  // eta = +1 or -1
  /// Signed degeneracy: +1, -1, or 0 when eta is not +-1.
  [[nodiscard]] int degenerate_sign() const noexcept;
  [[nodiscard]] bool on_unit_circle(double tol = 1e-12) const noexcept;

  /// Formats as "a+bi" with the given number of significant digits.
  [[nodiscard]] std::string to_string(int digits = 17) const;

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

/// 2x2 unitary selecting a self-adjoint extension.
class BoundaryUnitary {
 public:
  static constexpr double kUnitarityTol = 1e-12;

  BoundaryUnitary();  // Dirichlet, -I
  /// Throws InvalidArgument unless U^dagger U = I to kUnitarityTol.
  explicit BoundaryUnitary(const Mat2& entries);

  static BoundaryUnitary dirichlet();
  static BoundaryUnitary neumann();
  static BoundaryUnitary periodic();
  static BoundaryUnitary antiperiodic();

  [[nodiscard]] const Mat2& matrix() const noexcept { return m_; }
  [[nodiscard]] Complex operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat2 m_;
};

/// Endpoint values and derivatives of a function on [a, b].
struct BoundaryData {
  Complex va;  ///< psi(a)
  Complex vb;  ///< psi(b)
  Complex da;  ///< psi'(a)
  Complex db;  ///< psi'(b)

  [[nodiscard]] bool finite() const noexcept;
};

enum class BcKind { Dirichlet, Neumann, Periodic, Antiperiodic, EtaFamily, Other };

struct Classification {
  BcKind kind = BcKind::Other;
  /// Set for Periodic (1), Antiperiodic (-1) and EtaFamily.
  std::optional<EtaParameter> eta;

  /// Dirichlet, Neumann and the whole eta-family are dilation invariant.
  [[nodiscard]] bool dilation_invariant() const noexcept { return kind != BcKind::Other; }
};

std::string_view to_string(BcKind kind) noexcept;

/// Matrix of the eta-family; eta = inf maps to diag(1, -1).
BoundaryUnitary eta_to_unitary(const EtaParameter& eta);

/// Entrywise matching tolerance used by classify_unitary.
inline constexpr double kClassifyTol = 1e-9;

Classification classify_unitary(const BoundaryUnitary& u);

/// Norm of (I - U)(psi(a), psi(b)) - i (I + U)(-psi'(a), psi'(b)).
double bc_residual(const BoundaryUnitary& u, const BoundaryData& d);

/// Gamma(psi, phi) = <H psi|phi> - <psi|H phi> for H = -(1/2m) d^2/dx^2,
/// reduced to the endpoint bracket (1/2m)[conj(psi) phi' - conj(psi') phi]_a^b.
Complex boundary_form(const BoundaryData& psi, const BoundaryData& phi,
                      const MassConvention& mc = MassConvention{});

/// Boundary maps (psi(a) - i psi'(a), psi(b) + i psi'(b)).
Vec2 rho1(const BoundaryData& d);
/// Boundary maps (psi(a) + i psi'(a), psi(b) - i psi'(b)).
Vec2 rho2(const BoundaryData& d);

/// |<rho1 psi|rho1 phi> - <rho2 psi|rho2 phi> - 2i Gamma(psi, phi)| with
/// Gamma taken at 2m = 1, the convention in which the identity is exact.
double triple_identity_defect(const BoundaryData& psi, const BoundaryData& phi);

/// Boundary data of x -> scale^{-1/2} psi((x - shift)/scale) on the
/// transported interval [scale a + shift, scale b + shift].
BoundaryData dilation_transport(const BoundaryData& d, double scale, double shift);

/// Boundary data satisfying the eta condition built from the free values
/// psi(b) and psi'(a).
BoundaryData eta_compliant_data(const EtaParameter& eta, Complex free_value,
                                Complex free_derivative);

}  // namespace movwall
