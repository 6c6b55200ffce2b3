#ifndef GRWEPR_HILBERT_HPP
#define GRWEPR_HILBERT_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace grwepr {

using Amplitude = std::complex<double>;

// Every probability in this model is a dyadic rational; 1e-12 absorbs the
// rounding picked up by 1/sqrt(2) amplitudes along the way.
inline constexpr double kProbTolerance = 1e-12;

// Below this squared norm a state counts as the zero vector.
inline constexpr double kZeroNormThreshold = 1e-24;

enum class Wing { Left, Right };
enum class SpinDirection { Up, Down };

const char* to_string(Wing w);
const char* to_string(SpinDirection d);

// State of the two-spin system over the product basis, indexed as
//   0: |up_L up_R>,  1: |up_L down_R>,  2: |down_L up_R>,  3: |down_L down_R>.
// Unnormalized states and the zero vector are legal values.
class StateVector {
 public:
  StateVector() : amps_{} {}
  explicit StateVector(std::array<Amplitude, 4> amps) : amps_(amps) {}

  static StateVector basis(SpinDirection left, SpinDirection right);

  const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
  const std::array<Amplitude, 4>& amplitudes() const { return amps_; }

  double squared_norm() const;
  bool is_zero() const { return squared_norm() <= kZeroNormThreshold; }
  bool is_normalized(double tol = kProbTolerance) const;
  bool is_finite() const;

  friend StateVector operator+(const StateVector& a, const StateVector& b);
  friend StateVector operator-(const StateVector& a, const StateVector& b);
  friend StateVector operator*(const Amplitude& c, const StateVector& v);

 private:
  std::array<Amplitude, 4> amps_;
};

// Spin projector acting on one wing; the other wing's factor is untouched.
// Idempotent: applying it twice equals applying it once.
struct Projector {
  Wing wing;
  SpinDirection direction;
};

// (1/sqrt 2)(|up_L down_R> - |down_L up_R>), the spin singlet.
StateVector singlet();

// Zeroes every amplitude inconsistent with (wing, direction); does not
// renormalize.
StateVector apply_projector(const Projector& p, const StateVector& psi);

double squared_norm(const StateVector& psi);

// Scales psi to unit norm, preserving the overall phase. Throws
// ZeroVectorError when psi is (numerically) the zero vector.
StateVector normalize(const StateVector& psi);

// Componentwise comparison; phase-sensitive.
bool approx_equal(const StateVector& a, const StateVector& b,
                  double tol = kProbTolerance);

// Comparison modulo a global phase factor.
bool approx_equal_up_to_phase(const StateVector& a, const StateVector& b,
                              double tol = kProbTolerance);

}  // namespace grwepr

#endif
