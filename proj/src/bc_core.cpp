// Copyright 2026 The movwall Authors
// SPDX-License-Identifier: Apache-2.0

#include "movwall/bc_core.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace movwall {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  if (text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw InvalidArgument("cannot parse complex number '" + std::string(whole) + "'");
  return v;
}

bool close_entrywise(const Mat2& a, const Mat2& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

std::string format_real(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

EtaParameter::EtaParameter(Complex v) : value_(v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw InvalidArgument("eta must be finite; use EtaParameter::infinity()");
}

EtaParameter EtaParameter::infinity() noexcept {
  EtaParameter e;
  e.infinite_ = true;
  return e;
}

EtaParameter EtaParameter::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "inf" || s == "Inf" || s == "infinity" || s == "\xE2\x88\x9E") return infinity();
  if (s.empty()) throw InvalidArgument("empty eta");
  if (s.back() != 'i' && s.back() != 'j') return {Complex(parse_real(s, text), 0.0)};
  s.pop_back();
  // Split at the last sign that is not an exponent sign or the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {Complex(0.0, parse_real(s, text))};
  const std::string_view sv(s);
  return {Complex(parse_real(sv.substr(0, split), text), parse_real(sv.substr(split), text))};
}

Complex EtaParameter::value() const {
  if (infinite_) throw InvalidArgument("eta is the point at infinity");
  return value_;
}

bool EtaParameter::is_degenerate() const noexcept { return degenerate_sign() != 0; }

int EtaParameter::degenerate_sign() const noexcept {
  if (infinite_ || value_.imag() != 0.0) return 0;
  if (value_.real() == 1.0) return 1;
  if (value_.real() == -1.0) return -1;
  return 0;
}

bool EtaParameter::on_unit_circle(double tol) const noexcept {
  return !infinite_ && std::abs(std::abs(value_) - 1.0) <= tol;
}

std::string EtaParameter::to_string(int digits) const {
  if (infinite_) return "inf";
  std::string out = format_real(value_.real(), digits);
  const double im = value_.imag();
  out += (std::signbit(im) ? "-" : "+");
  out += format_real(std::abs(im), digits);
  out += "i";
  return out;
}

BoundaryUnitary::BoundaryUnitary() : m_(-Mat2::Identity()) {}

BoundaryUnitary::BoundaryUnitary(const Mat2& entries) : m_(entries) {
  if (!m_.allFinite()) throw InvalidArgument("boundary unitary has non-finite entries");
  const double defect = (m_.adjoint() * m_ - Mat2::Identity()).cwiseAbs().maxCoeff();
  if (defect > kUnitarityTol)
    throw InvalidArgument("boundary matrix is not unitary (defect " + format_real(defect, 3) + ")");
}

BoundaryUnitary BoundaryUnitary::dirichlet() { return BoundaryUnitary(-Mat2::Identity()); }
BoundaryUnitary BoundaryUnitary::neumann() { return BoundaryUnitary(Mat2::Identity()); }
BoundaryUnitary BoundaryUnitary::periodic() { return BoundaryUnitary(pauli_x()); }
BoundaryUnitary BoundaryUnitary::antiperiodic() { return BoundaryUnitary(Mat2(-pauli_x())); }

bool BoundaryData::finite() const noexcept {
  auto ok = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return ok(va) && ok(vb) && ok(da) && ok(db);
}

std::string_view to_string(BcKind kind) noexcept {
  switch (kind) {
    case BcKind::Dirichlet: return "dirichlet";
    case BcKind::Neumann: return "neumann";
    case BcKind::Periodic: return "periodic";
    case BcKind::Antiperiodic: return "antiperiodic";
    case BcKind::EtaFamily: return "eta_family";
    case BcKind::Other: return "other";
  }
  return "other";
}

BoundaryUnitary eta_to_unitary(const EtaParameter& eta) {
  if (eta.is_infinite()) return BoundaryUnitary(pauli_z());
  const Complex e = eta.value();
  const double r2 = std::norm(e);
  const double den = 1.0 + r2;
  Mat2 u;
  u << (r2 - 1.0) / den, 2.0 * e / den, 2.0 * std::conj(e) / den, (1.0 - r2) / den;
  return BoundaryUnitary(u);
}

Classification classify_unitary(const BoundaryUnitary& u) {
  const Mat2& m = u.matrix();
  if (close_entrywise(m, -Mat2::Identity(), kClassifyTol)) return {BcKind::Dirichlet, {}};
  if (close_entrywise(m, Mat2::Identity(), kClassifyTol)) return {BcKind::Neumann, {}};
  if (close_entrywise(m, pauli_x(), kClassifyTol)) return {BcKind::Periodic, EtaParameter(1.0)};
  if (close_entrywise(m, -pauli_x(), kClassifyTol))
    return {BcKind::Antiperiodic, EtaParameter(-1.0)};
  if (close_entrywise(m, pauli_z(), kClassifyTol))
    return {BcKind::EtaFamily, EtaParameter::infinity()};

  // eta = u12 / (1 - u11) = (1 + u11) / u21; use the branch without
  // cancellation.
  const double u11 = m(0, 0).real();
  Complex candidate;
  if (u11 <= 0.0) {
    candidate = m(0, 1) / (1.0 - m(0, 0));
  } else {
    const Complex den = m(1, 0);
    if (std::abs(den) == 0.0) return {BcKind::Other, {}};
    candidate = (1.0 + m(0, 0)) / den;
  }
  if (!std::isfinite(candidate.real()) || !std::isfinite(candidate.imag()))
    return {BcKind::Other, {}};
  const EtaParameter eta(candidate);
  if (close_entrywise(eta_to_unitary(eta).matrix(), m, kClassifyTol))
    return {BcKind::EtaFamily, eta};
  return {BcKind::Other, {}};
}

double bc_residual(const BoundaryUnitary& u, const BoundaryData& d) {
  const Mat2& m = u.matrix();
  const Mat2 id = Mat2::Identity();
  const Vec2 values(d.va, d.vb);
  const Vec2 slopes(-d.da, d.db);
  return ((id - m) * values - kI * ((id + m) * slopes)).norm();
}

Complex boundary_form(const BoundaryData& psi, const BoundaryData& phi, const MassConvention& mc) {
  const Complex at_b = std::conj(psi.vb) * phi.db - std::conj(psi.db) * phi.vb;
  const Complex at_a = std::conj(psi.va) * phi.da - std::conj(psi.da) * phi.va;
  return (at_b - at_a) / (2.0 * mc.mass());
}

Vec2 rho1(const BoundaryData& d) { return {d.va - kI * d.da, d.vb + kI * d.db}; }

Vec2 rho2(const BoundaryData& d) { return {d.va + kI * d.da, d.vb - kI * d.db}; }

double triple_identity_defect(const BoundaryData& psi, const BoundaryData& phi) {
  const MassConvention half(0.5);
  const Complex lhs = rho1(psi).dot(rho1(phi)) - rho2(psi).dot(rho2(phi));
  return std::abs(lhs - 2.0 * kI * boundary_form(psi, phi, half));
}

BoundaryData dilation_transport(const BoundaryData& d, double scale, double shift) {
  (void)shift;  // endpoint data are translation invariant
  if (!(scale > 0.0)) throw InvalidArgument("dilation scale must be positive");
  const double value_factor = 1.0 / std::sqrt(scale);
  const double slope_factor = value_factor / scale;
  return {d.va * value_factor, d.vb * value_factor, d.da * slope_factor, d.db * slope_factor};
}

BoundaryData eta_compliant_data(const EtaParameter& eta, Complex free_value,
                                Complex free_derivative) {
  if (eta.is_infinite()) return {free_value, 0.0, 0.0, free_derivative};
  const Complex e = eta.value();
  return {e * free_value, free_value, free_derivative, std::conj(e) * free_derivative};
}

}  // namespace movwall
