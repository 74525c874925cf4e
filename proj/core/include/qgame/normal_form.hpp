#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qgame/extensive_game.hpp"

namespace qgame {

// A finite strategic game (N, {S_i}, {u_i}) as a full payoff tensor.
// Profile indices run with player 1 most significant (canonical row order).
class NormalForm {
 public:
  NormalForm(std::vector<std::vector<std::string>> strategy_labels,
             std::vector<double> payoffs);

  int num_players() const { return static_cast<int>(labels_.size()); }
  std::size_t num_strategies(int player) const {
    return labels_[static_cast<std::size_t>(player - 1)].size();
  }
  const std::vector<std::string>& strategy_labels(int player) const {
    return labels_[static_cast<std::size_t>(player - 1)];
  }

  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t profile_index(std::span<const int> profile) const;
  std::vector<int> profile_from_index(std::size_t index) const;

  // Per-player payoff vector of a profile.
  std::span<const double> payoff(std::span<const int> profile) const;
  std::span<const double> payoff_at(std::size_t profile_index) const;

  std::string profile_display(std::span<const int> profile) const;  // "a0;b1;c0"

 private:
  std::vector<std::vector<std::string>> labels_;
  std::vector<double> payoffs_;  // num_profiles * num_players, row-major
  std::size_t num_profiles_;
};

// The strategic game whose strategies are full contingent plans and whose
// payoffs come from outcomes of plans.
NormalForm normal_representation(const ExtensiveGame& game);

// A probability distribution over one player's pure strategies, aligned
// with the canonical enumeration order.
struct MixedStrategy {
  int owner = 0;
  std::vector<double> weights;  // nonnegative, sums to 1 within 1e-12
};

// Point mass on one pure strategy.
MixedStrategy pure_as_mixed(int owner, std::size_t strategy_index,
                            std::size_t num_strategies);

// Product distribution from per-information-set probabilities of action 0
// (behavioral view; assumes the player mixes independently per set).
MixedStrategy behavioral_strategy(const ExtensiveGame& game, int player,
                                  std::span<const double> prob_action0);

// Expected payoff vector of a mixed profile: sum over pure profiles of the
// product of weights times the pure payoff.
std::vector<double> mixed_expected_utility(const NormalForm& nf,
                                           const std::vector<MixedStrategy>& profile);

}  // namespace qgame
