#include "grwepr/hilbert.hpp"

#include <cmath>

#include "grwepr/errors.hpp"

namespace grwepr {

const char* to_string(Wing w) { return w == Wing::Left ? "left" : "right"; }

const char* to_string(SpinDirection d) {
  return d == SpinDirection::Up ? "up" : "down";
}

namespace {

// Basis index layout: bit 1 = left spin down, bit 0 = right spin down.
bool component_matches(std::size_t index, Wing wing, SpinDirection direction) {
  const std::size_t bit = wing == Wing::Left ? (index >> 1) & 1 : index & 1;
  return bit == (direction == SpinDirection::Down ? 1u : 0u);
}

}  // namespace

StateVector StateVector::basis(SpinDirection left, SpinDirection right) {
  std::array<Amplitude, 4> amps{};
  const std::size_t index =
      (static_cast<std::size_t>(left == SpinDirection::Down) << 1) |
      static_cast<std::size_t>(right == SpinDirection::Down);
  amps[index] = 1.0;
  return StateVector(amps);
}

double StateVector::squared_norm() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(squared_norm() - 1.0) <= tol;
}

bool StateVector::is_finite() const {
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

StateVector operator+(const StateVector& a, const StateVector& b) {
  std::array<Amplitude, 4> amps;
  for (std::size_t i = 0; i < 4; ++i) amps[i] = a.amps_[i] + b.amps_[i];
  return StateVector(amps);
}

StateVector operator-(const StateVector& a, const StateVector& b) {
  std::array<Amplitude, 4> amps;
  for (std::size_t i = 0; i < 4; ++i) amps[i] = a.amps_[i] - b.amps_[i];
  return StateVector(amps);
}

StateVector operator*(const Amplitude& c, const StateVector& v) {
  std::array<Amplitude, 4> amps;
  for (std::size_t i = 0; i < 4; ++i) amps[i] = c * v.amps_[i];
  return StateVector(amps);
}

StateVector singlet() {
  const double r = std::sqrt(0.5);
  return StateVector({Amplitude{0.0}, Amplitude{r}, Amplitude{-r}, Amplitude{0.0}});
}

StateVector apply_projector(const Projector& p, const StateVector& psi) {
  std::array<Amplitude, 4> amps{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (component_matches(i, p.wing, p.direction)) amps[i] = psi[i];
  }
  return StateVector(amps);
}

double squared_norm(const StateVector& psi) { return psi.squared_norm(); }

StateVector normalize(const StateVector& psi) {
  const double n2 = psi.squared_norm();
  if (n2 <= kZeroNormThreshold) {
    throw ZeroVectorError("cannot normalize the zero vector");
  }
  return Amplitude{1.0 / std::sqrt(n2)} * psi;
}

bool approx_equal(const StateVector& a, const StateVector& b, double tol) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

bool approx_equal_up_to_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  const bool a_zero = a.is_zero();
  const bool b_zero = b.is_zero();
  if (a_zero || b_zero) return a_zero == b_zero;

  // Align the phases on the largest component of a.
  std::size_t k = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::norm(a[i]) > best) {
      best = std::norm(a[i]);
      k = i;
    }
  }
  if (std::abs(b[k]) == 0.0) return false;
  Amplitude phase = b[k] / a[k];
  phase /= std::abs(phase);
  return approx_equal(phase * a, b, tol);
}

}  // namespace grwepr
