#ifndef GRWEPR_EXPERIMENT_HPP
#define GRWEPR_EXPERIMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "grwepr/collapse.hpp"

namespace grwepr {

enum class FrameOrder { RightFirst, LeftFirst };

const char* to_string(FrameOrder f);

// The EPR-Bell run: the left wing always measures along the shared axis, the
// right wing either measures along the same axis or stays idle.
struct Scenario {
  Setting right_setting = Setting::Measure;
  FrameOrder frame_order = FrameOrder::RightFirst;
  Formulation formulation = Formulation::NonLinear;
};

Setting wing_setting(const Scenario& s, Wing w);

// One complete history. A wing's coin is absent when that wing does not
// measure: the device never interacts, so no flip happens.
struct BranchRecord {
  std::optional<CoinFlip> left_coin;
  std::optional<CoinFlip> right_coin;
  Outcome left_outcome = Outcome::None;
  Outcome right_outcome = Outcome::None;
  StateVector final_state;
  double raw_prob = 0.0;
  double cooked_prob = 0.0;

  std::optional<CoinFlip> coin(Wing w) const;
  Outcome outcome(Wing w) const;
};

// Probabilities over joint outcomes (left, right). Entries may be zero;
// absent pairs read as zero.
class JointDistribution {
 public:
  using Key = std::pair<Outcome, Outcome>;

  void add(Outcome left, Outcome right, double prob);
  void accumulate(const JointDistribution& other, double weight);

  double p(Outcome left, Outcome right) const;
  double total() const;
  const std::map<Key, double>& entries() const { return probs_; }

  std::map<Outcome, double> left_marginal() const;
  std::map<Outcome, double> right_marginal() const;

  double max_abs_diff(const JointDistribution& other) const;
  double total_variation(const JointDistribution& other) const;

 private:
  std::map<Key, double> probs_;
};

// All coin-flip branches of a scenario in canonical (left coin, right coin)
// order: 4 records when the right wing measures, 2 otherwise. cooked_prob is
// normalized across branches; for the non-linear formulation it equals
// raw_prob (final states are already normalized). Throws AllBranchesDeadError
// when every branch has zero cooked weight; that cannot happen from the
// singlet but is reachable from other initial states.
std::vector<BranchRecord> enumerate_branches(const Scenario& s);
std::vector<BranchRecord> enumerate_branches(const Scenario& s,
                                             const StateVector& initial);

// Marginalizes cooked_prob over the coins.
JointDistribution joint_distribution(const std::vector<BranchRecord>& records);

struct SampleResult {
  std::map<JointDistribution::Key, std::uint64_t> counts;
  std::uint64_t trials = 0;

  JointDistribution frequencies() const;
};

// Seeded Monte Carlo cross-check of enumerate_branches. The non-linear run
// flips coins and applies the step rule in frame order; the cooked run draws
// whole histories from the reweighted branch distribution, since the
// reweighting is a post-hoc adjustment rather than a sequential rule. Trials
// are processed in fixed-size chunks, each with its own substream derived
// from (seed, chunk index), so the merged counts do not depend on the worker
// count.
SampleResult sample(const Scenario& s, std::uint64_t seed,
                    std::uint64_t trials, unsigned workers = 1);

}  // namespace grwepr

#endif
