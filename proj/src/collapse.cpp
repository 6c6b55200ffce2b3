#include "grwepr/collapse.hpp"

#include <cmath>

#include "grwepr/errors.hpp"

namespace grwepr {

const char* to_string(CoinFlip c) { return c == CoinFlip::Heads ? "H" : "T"; }

const char* to_string(Setting s) {
  return s == Setting::Measure ? "measure" : "none";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Up:
      return "up";
    case Outcome::Down:
      return "down";
    default:
      return "none";
  }
}

const char* to_string(Formulation f) {
  return f == Formulation::NonLinear ? "nonlinear" : "cooking";
}

Outcome coin_outcome(CoinFlip coin) {
  return coin == CoinFlip::Heads ? Outcome::Up : Outcome::Down;
}

MeasurementStep nonlinear_step(const StateVector& psi_in, Wing wing,
                               Setting setting, CoinFlip coin) {
  if (setting == Setting::NoMeasure) {
    return {Outcome::None, psi_in, false};
  }

  const StateVector up = apply_projector({wing, SpinDirection::Up}, psi_in);
  const StateVector down = apply_projector({wing, SpinDirection::Down}, psi_in);
  const double a = up.squared_norm();
  const double b = down.squared_norm();
  if (a + b <= kZeroNormThreshold) {
    throw DegenerateStateError(
        "state-dependent measurement rule applied to a zero-norm state");
  }

  if (std::abs(a - b) <= kTieRelativeThreshold * (a + b)) {
    const bool heads = coin == CoinFlip::Heads;
    return {coin_outcome(coin), normalize(heads ? up : down), true};
  }
  if (a > b) return {Outcome::Up, normalize(up), false};
  return {Outcome::Down, normalize(down), false};
}

MeasurementStep cooking_step(const StateVector& psi_in, Wing wing,
                             Setting setting, CoinFlip coin) {
  if (setting == Setting::NoMeasure) {
    return {Outcome::None, psi_in, false};
  }
  const SpinDirection dir =
      coin == CoinFlip::Heads ? SpinDirection::Up : SpinDirection::Down;
  return {coin_outcome(coin), apply_projector({wing, dir}, psi_in), true};
}

double cooked_weight(double raw_prob, const StateVector& final_state) {
  return raw_prob * final_state.squared_norm();
}

MeasurementStep formulation_step(Formulation f, const StateVector& psi_in,
                                 Wing wing, Setting setting, CoinFlip coin) {
  return f == Formulation::NonLinear
             ? nonlinear_step(psi_in, wing, setting, coin)
             : cooking_step(psi_in, wing, setting, coin);
}

}  // namespace grwepr
