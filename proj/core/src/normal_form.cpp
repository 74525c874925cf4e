#include "qgame/normal_form.hpp"

#include <cmath>
#include <numeric>

namespace qgame {

NormalForm::NormalForm(std::vector<std::vector<std::string>> strategy_labels,
                       std::vector<double> payoffs)
    : labels_(std::move(strategy_labels)), payoffs_(std::move(payoffs)) {
  if (labels_.empty()) throw DimensionError("at least one player is required");
  num_profiles_ = 1;
  for (const auto& l : labels_) {
    if (l.empty()) throw DomainError("empty strategy list");
    num_profiles_ *= l.size();
  }
  if (payoffs_.size() != num_profiles_ * labels_.size())
    throw DimensionError("payoff tensor is not total");
}

std::size_t NormalForm::profile_index(std::span<const int> profile) const {
  if (profile.size() != labels_.size())
    throw DimensionError("profile length must equal player count");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const int s = profile[i];
    if (s < 0 || static_cast<std::size_t>(s) >= labels_[i].size())
      throw DomainError("strategy index out of range");
    idx = idx * labels_[i].size() + static_cast<std::size_t>(s);
  }
  return idx;
}

std::vector<int> NormalForm::profile_from_index(std::size_t index) const {
  std::vector<int> profile(labels_.size());
  for (std::size_t i = labels_.size(); i-- > 0;) {
    profile[i] = static_cast<int>(index % labels_[i].size());
    index /= labels_[i].size();
  }
  return profile;
}

std::span<const double> NormalForm::payoff(std::span<const int> profile) const {
  return payoff_at(profile_index(profile));
}

std::span<const double> NormalForm::payoff_at(std::size_t profile_index) const {
  return {payoffs_.data() + profile_index * labels_.size(), labels_.size()};
}

std::string NormalForm::profile_display(std::span<const int> profile) const {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out += ';';
    out += labels_[i][static_cast<std::size_t>(profile[i])];
  }
  return out;
}

NormalForm normal_representation(const ExtensiveGame& game) {
  const int n = game.num_players();
  std::vector<std::vector<PureStrategy>> strategies;
  std::vector<std::vector<std::string>> labels;
  for (int i = 1; i <= n; ++i) {
    strategies.push_back(enumerate_pure_strategies(game, i));
    std::vector<std::string> player_labels;
    for (const PureStrategy& s : strategies.back())
      player_labels.push_back(game.strategy_display(s));
    labels.push_back(std::move(player_labels));
  }

  std::size_t num_profiles = 1;
  for (const auto& s : strategies) num_profiles *= s.size();

  std::vector<double> payoffs;
  payoffs.reserve(num_profiles * static_cast<std::size_t>(n));
  std::vector<PureStrategy> profile(static_cast<std::size_t>(n));
  for (std::size_t idx = 0; idx < num_profiles; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = strategies.size(); i-- > 0;) {
      profile[i] = strategies[i][rest % strategies[i].size()];
      rest /= strategies[i].size();
    }
    const auto& u = game.payoffs_at(outcome(game, profile));
    payoffs.insert(payoffs.end(), u.begin(), u.end());
  }
  return NormalForm(std::move(labels), std::move(payoffs));
}

MixedStrategy pure_as_mixed(int owner, std::size_t strategy_index,
                            std::size_t num_strategies) {
  MixedStrategy t{owner, std::vector<double>(num_strategies, 0.0)};
  t.weights.at(strategy_index) = 1.0;
  return t;
}

MixedStrategy behavioral_strategy(const ExtensiveGame& game, int player,
                                  std::span<const double> prob_action0) {
  const std::size_t k = game.information_sets(player).size();
  if (prob_action0.size() != k)
    throw DimensionError("one probability per information set is required");
  for (double p : prob_action0)
    if (!(p >= 0.0 && p <= 1.0))
      throw DomainError("probabilities must lie in [0, 1]");

  MixedStrategy t{player, std::vector<double>(std::size_t{1} << k, 0.0)};
  for (std::size_t s = 0; s < t.weights.size(); ++s) {
    double w = 1.0;
    for (std::size_t pos = 0; pos < k; ++pos) {
      const bool zero = ((s >> (k - 1 - pos)) & 1u) == 0;
      w *= zero ? prob_action0[pos] : 1.0 - prob_action0[pos];
    }
    t.weights[s] = w;
  }
  return t;
}

std::vector<double> mixed_expected_utility(const NormalForm& nf,
                                           const std::vector<MixedStrategy>& profile) {
  const int n = nf.num_players();
  if (static_cast<int>(profile.size()) != n)
    throw DimensionError("profile must contain one strategy per player");
  for (int i = 1; i <= n; ++i) {
    const MixedStrategy& t = profile[static_cast<std::size_t>(i - 1)];
    if (t.weights.size() != nf.num_strategies(i))
      throw DimensionError("weight vector length mismatch for player " +
                           std::to_string(i));
    double sum = 0.0;
    for (double w : t.weights) {
      if (w < 0.0) throw DomainError("mixed-strategy weights must be nonnegative");
      sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw DomainError("mixed-strategy weights must sum to 1");
  }

  std::vector<double> expected(static_cast<std::size_t>(n), 0.0);
  for (std::size_t idx = 0; idx < nf.num_profiles(); ++idx) {
    const std::vector<int> pure = nf.profile_from_index(idx);
    double w = 1.0;
    for (int i = 0; i < n; ++i)
      w *= profile[static_cast<std::size_t>(i)]
               .weights[static_cast<std::size_t>(pure[static_cast<std::size_t>(i)])];
    if (w == 0.0) continue;
    const auto u = nf.payoff_at(idx);
    for (int i = 0; i < n; ++i) expected[static_cast<std::size_t>(i)] += w * u[i];
  }
  return expected;
}

}  // namespace qgame
