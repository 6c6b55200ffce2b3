#ifndef GRWEPR_COLLAPSE_HPP
#define GRWEPR_COLLAPSE_HPP

#include "grwepr/hilbert.hpp"

namespace grwepr {

enum class CoinFlip { Heads, Tails };
enum class Setting { Measure, NoMeasure };
enum class Outcome { Up, Down, None };
enum class Formulation { NonLinear, LinearCooking };

const char* to_string(CoinFlip c);
const char* to_string(Setting s);
const char* to_string(Outcome o);
const char* to_string(Formulation f);

Outcome coin_outcome(CoinFlip coin);  // Heads -> Up, Tails -> Down

// Relative tie window for the state-dependent rule: projected weights a and b
// count as balanced when |a - b| <= kTieRelativeThreshold * (a + b). Outside
// the window the dominant component wins with probability one.
inline constexpr double kTieRelativeThreshold = 1e-9;

struct MeasurementStep {
  Outcome outcome = Outcome::None;
  StateVector post_state;
  bool coin_used = false;
};

// One measurement under the state-dependent (non-linear) rule: the dominant
// spin component wins outright and the post-state is the normalized
// projection; the coin only breaks ties. NoMeasure returns the input state
// untouched. Throws DegenerateStateError on a zero-norm input.
MeasurementStep nonlinear_step(const StateVector& psi_in, Wing wing,
                               Setting setting, CoinFlip coin);

// One measurement under the linear rule: the coin always decides the outcome
// and the projected state is kept unnormalized. Zero post-states are legal;
// they pick up cooked weight 0.
MeasurementStep cooking_step(const StateVector& psi_in, Wing wing,
                             Setting setting, CoinFlip coin);

// Branch weight after reweighting by the squared norm of the final state.
// Normalizing across branches is the caller's job.
double cooked_weight(double raw_prob, const StateVector& final_state);

MeasurementStep formulation_step(Formulation f, const StateVector& psi_in,
                                 Wing wing, Setting setting, CoinFlip coin);

}  // namespace grwepr

#endif
