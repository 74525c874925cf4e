#include "qgame/quantum_game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qgame/text.hpp"

namespace qgame {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string family_name(OperatorFamily f) {
  switch (f) {
    case OperatorFamily::PauliPair: return "pauli";
    case OperatorFamily::OneParameter: return "one-parameter";
    case OperatorFamily::TwoParameter: return "two-parameter";
    case OperatorFamily::FullSU2: return "su2";
  }
  throw Error("unknown operator family");
}

QubitMove QubitMove::sigma(int k) {
  if (k != 0 && k != 1) throw DomainError("sigma index must be 0 or 1");
  QubitMove m;
  m.kind_ = Kind::Sigma;
  m.sigma_ = k;
  return m;
}

QubitMove QubitMove::angles(double theta, double alpha) {
  if (!std::isfinite(theta) || !std::isfinite(alpha))
    throw DomainError("angles must be finite");
  QubitMove m;
  m.kind_ = Kind::Angles;
  m.theta_ = theta;
  m.alpha_ = alpha;
  return m;
}

QubitMove QubitMove::arbitrary(const Unitary2& u) {
  QubitMove m;
  m.kind_ = Kind::Arbitrary;
  m.explicit_u_ = u;
  return m;
}

Unitary2 QubitMove::unitary() const {
  switch (kind_) {
    case Kind::Sigma: return pauli(sigma_);
    case Kind::Angles: return u_theta_alpha(theta_, alpha_, /*permissive=*/true);
    case Kind::Arbitrary: return *explicit_u_;
  }
  throw Error("unknown move kind");
}

bool QubitMove::conforms(OperatorFamily family) const {
  switch (family) {
    case OperatorFamily::PauliPair:
      return kind_ == Kind::Sigma;
    case OperatorFamily::OneParameter:
      return kind_ == Kind::Angles && alpha_ == 0.0 && theta_ >= 0.0 &&
             theta_ <= kPi;
    case OperatorFamily::TwoParameter:
      return kind_ == Kind::Angles && theta_ >= 0.0 && theta_ <= kPi &&
             alpha_ >= 0.0 && alpha_ <= kPi / 2.0;
    case OperatorFamily::FullSU2:
      return true;
  }
  return false;
}

std::string QubitMove::to_string() const {
  switch (kind_) {
    case Kind::Sigma: return sigma_ == 0 ? "s0" : "s1";
    case Kind::Angles:
      return alpha_ == 0.0 ? format_angle(theta_)
                           : format_angle(theta_) + "," + format_angle(alpha_);
    case Kind::Arbitrary: return "su2";
  }
  return "?";
}

std::vector<int> QubitAssignment::qubits_of_player(int player) const {
  std::vector<int> out;
  for (int j = 0; j < num_qubits(); ++j)
    if (player_of_qubit[static_cast<std::size_t>(j)] == player) out.push_back(j);
  return out;
}

Scheme Scheme::mw(double gamma_angle) {
  Scheme s;
  s.kind = SchemeKind::MW;
  s.gamma = gamma_angle;
  return s;
}

Scheme Scheme::ewl(std::map<int, OperatorFamily> per_player) {
  Scheme s;
  s.kind = SchemeKind::EWL;
  s.families = std::move(per_player);
  return s;
}

namespace {

// For each qubit of one player (ascending), the position of its information
// set within the player's id-sorted set list. Classical strategies are
// enumerated over that id order with the first set most significant.
std::vector<std::size_t> infoset_positions(const QubitAssignment& assignment,
                                           const std::vector<int>& qubits) {
  std::vector<std::string> ids, sorted;
  for (int q : qubits)
    ids.push_back(assignment.infoset_of_qubit[static_cast<std::size_t>(q)]);
  sorted = ids;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> pos(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k)
    pos[k] = static_cast<std::size_t>(
        std::find(sorted.begin(), sorted.end(), ids[k]) - sorted.begin());
  return pos;
}

}  // namespace

GameIsomorphism GameIsomorphism::build(int num_players,
                                       const QubitAssignment& assignment,
                                       bool complemented) {
  GameIsomorphism iso;
  for (int i = 1; i <= num_players; ++i) {
    const std::vector<int> qubits = assignment.qubits_of_player(i);
    const std::vector<std::size_t> pos = infoset_positions(assignment, qubits);
    const std::size_t k = qubits.size();
    std::vector<std::vector<int>> bits(std::size_t{1} << k);
    for (std::size_t s = 0; s < bits.size(); ++s) {
      bits[s].resize(k);
      for (std::size_t idx = 0; idx < k; ++idx) {
        const int bit = static_cast<int>((s >> (k - 1 - pos[idx])) & 1u);
        bits[s][idx] = complemented ? 1 - bit : bit;
      }
    }
    iso.qubits_of_player_.push_back(qubits);
    iso.bits_.push_back(std::move(bits));
  }
  return iso;
}

GameIsomorphism GameIsomorphism::canonical(const ExtensiveGame& game,
                                           const QubitAssignment& assignment) {
  return build(game.num_players(), assignment, false);
}

GameIsomorphism GameIsomorphism::complemented(const ExtensiveGame& game,
                                              const QubitAssignment& assignment) {
  return build(game.num_players(), assignment, true);
}

QuantumStrategyProfile GameIsomorphism::map_profile(
    std::span<const int> classical_profile,
    std::span<const OperatorFamily> families) const {
  const std::size_t m = families.size();
  std::vector<QubitMove> moves(m, QubitMove::sigma(0));
  if (classical_profile.size() != qubits_of_player_.size())
    throw DimensionError("profile length must equal player count");
  for (std::size_t p = 0; p < qubits_of_player_.size(); ++p) {
    const auto& qubits = qubits_of_player_[p];
    const auto& bits = bits_[p].at(static_cast<std::size_t>(classical_profile[p]));
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      const std::size_t q = static_cast<std::size_t>(qubits[k]);
      if (q >= m) throw DimensionError("qubit index exceeds family list");
      moves[q] = families[q] == OperatorFamily::PauliPair
                     ? QubitMove::sigma(bits[k])
                     : QubitMove::angles(bits[k] ? kPi : 0.0);
    }
  }
  return moves;
}

QuantizeResult quantize(const ExtensiveGame& game, const Scheme& scheme,
                        const std::vector<std::string>& zeta_order) {
  const auto& all_sets = game.information_sets();
  if (all_sets.empty())
    throw UnsupportedGameError("the game has no information sets to quantize");

  // zeta: qubit -> information set.
  std::vector<const InformationSet*> zeta;
  if (zeta_order.empty()) {
    for (const InformationSet& s : all_sets) zeta.push_back(&s);
  } else {
    if (zeta_order.size() != all_sets.size())
      throw DomainError("zeta order must list every information set exactly once");
    std::set<std::string> seen;
    for (const std::string& id : zeta_order) {
      if (!seen.insert(id).second)
        throw DomainError("duplicate information set in zeta order: " + id);
      auto it = std::find_if(all_sets.begin(), all_sets.end(),
                             [&id](const InformationSet& s) { return s.id == id; });
      if (it == all_sets.end())
        throw DomainError("unknown information set in zeta order: " + id);
      zeta.push_back(&*it);
    }
  }

  const int m = static_cast<int>(zeta.size());
  QubitAssignment assignment;
  for (const InformationSet* s : zeta) {
    assignment.infoset_of_qubit.push_back(s->id);
    assignment.player_of_qubit.push_back(s->owner);
  }
  for (int i = 1; i <= game.num_players(); ++i)
    if (assignment.qubits_of_player(i).empty())
      throw UnsupportedGameError("player " + std::to_string(i) +
                                 " owns no information set; xi would not be "
                                 "surjective");

  // Operator families per qubit.
  std::vector<OperatorFamily> allowed(static_cast<std::size_t>(m),
                                      OperatorFamily::PauliPair);
  if (scheme.kind == SchemeKind::EWL) {
    for (const auto& [player, family] : scheme.families)
      if (player < 1 || player > game.num_players())
        throw DomainError("family given for unknown player " +
                          std::to_string(player));
    for (int j = 0; j < m; ++j) {
      const int owner = assignment.player_of_qubit[static_cast<std::size_t>(j)];
      auto it = scheme.families.find(owner);
      allowed[static_cast<std::size_t>(j)] =
          it == scheme.families.end() ? OperatorFamily::OneParameter : it->second;
    }
  }

  Basis basis = scheme.kind == SchemeKind::MW ? Basis::computational(m)
                                              : ewl_basis(m);
  StateVector initial = scheme.kind == SchemeKind::MW
                            ? mw_initial_state(scheme.gamma, m)
                            : basis.vector(0);

  // v_i(b) := u'_i of the classical profile that flips exactly the qubits
  // where b differs from 0...0, under the canonical action-to-sigma map.
  GameIsomorphism iso = GameIsomorphism::canonical(game, assignment);
  const std::size_t dim = std::size_t{1} << m;
  std::vector<std::vector<double>> coefficients(
      static_cast<std::size_t>(game.num_players()), std::vector<double>(dim));

  // Position of each qubit's information set inside its owner's strategy.
  std::vector<std::vector<int>> owner_qubits;
  std::vector<std::vector<std::size_t>> owner_positions;
  for (int i = 1; i <= game.num_players(); ++i) {
    owner_qubits.push_back(assignment.qubits_of_player(i));
    owner_positions.push_back(infoset_positions(assignment, owner_qubits.back()));
  }

  std::vector<PureStrategy> profile;
  for (int i = 1; i <= game.num_players(); ++i)
    profile.push_back(
        PureStrategy{i, std::vector<int>(owner_qubits[static_cast<std::size_t>(i - 1)].size())});

  for (std::size_t label = 0; label < dim; ++label) {
    for (int i = 1; i <= game.num_players(); ++i) {
      const auto& qubits = owner_qubits[static_cast<std::size_t>(i - 1)];
      const auto& pos = owner_positions[static_cast<std::size_t>(i - 1)];
      PureStrategy& s = profile[static_cast<std::size_t>(i - 1)];
      for (std::size_t k = 0; k < qubits.size(); ++k) {
        const int bit =
            static_cast<int>((label >> (m - 1 - qubits[k])) & std::size_t{1});
        s.actions[pos[k]] = bit;
      }
    }
    const auto& u = game.payoffs_at(outcome(game, profile));
    for (int i = 0; i < game.num_players(); ++i)
      coefficients[static_cast<std::size_t>(i)][label] = u[static_cast<std::size_t>(i)];
  }

  QuantumGameSpec spec{scheme.kind,
                       scheme.kind == SchemeKind::MW ? scheme.gamma : 0.0,
                       m,
                       game.num_players(),
                       std::move(initial),
                       std::move(assignment),
                       std::move(allowed),
                       PayoffFunctional{std::move(basis), std::move(coefficients)}};
  return QuantizeResult{std::move(spec), std::move(iso)};
}

StateVector final_state(const QuantumGameSpec& spec,
                        const QuantumStrategyProfile& tau) {
  if (static_cast<int>(tau.size()) != spec.num_qubits)
    throw DimensionError("profile must contain one move per qubit");
  std::vector<Unitary2> ops;
  ops.reserve(tau.size());
  for (std::size_t j = 0; j < tau.size(); ++j) {
    const OperatorFamily family = spec.allowed_ops[j];
    if (!tau[j].conforms(family))
      throw StrategyError("qubit " + std::to_string(j + 1) + ": move '" +
                          tau[j].to_string() + "' is outside the " +
                          family_name(family) + " family");
    ops.push_back(tau[j].unitary());
  }
  return apply_product_operator(ops, spec.initial_state);
}

std::vector<double> payoff(const QuantumGameSpec& spec,
                           const QuantumStrategyProfile& tau) {
  const StateVector fin = final_state(spec, tau);
  const std::vector<double> probs =
      measurement_probabilities(fin, spec.payoff_functional.basis);
  std::vector<double> e(static_cast<std::size_t>(spec.num_players), 0.0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& v = spec.payoff_functional.coefficients[i];
    for (std::size_t b = 0; b < probs.size(); ++b) e[i] += v[b] * probs[b];
  }
  return e;
}

NormalForm induced_strategic_game(
    const QuantumGameSpec& spec,
    const std::vector<std::vector<PlayerStrategy>>& strategy_lists) {
  if (static_cast<int>(strategy_lists.size()) != spec.num_players)
    throw DimensionError("one strategy list per player is required");

  std::vector<std::vector<int>> qubits;
  std::vector<std::vector<std::string>> labels;
  for (int i = 1; i <= spec.num_players; ++i) {
    qubits.push_back(spec.assignment.qubits_of_player(i));
    const auto& list = strategy_lists[static_cast<std::size_t>(i - 1)];
    if (list.empty()) throw DomainError("empty strategy list for player " +
                                        std::to_string(i));
    std::vector<std::string> player_labels;
    for (const PlayerStrategy& s : list) {
      if (s.size() != qubits.back().size())
        throw DimensionError("strategy arity mismatch for player " +
                             std::to_string(i));
      std::string label;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) label += '+';
        label += s[k].to_string();
      }
      player_labels.push_back(std::move(label));
    }
    labels.push_back(std::move(player_labels));
  }

  std::size_t num_profiles = 1;
  for (const auto& list : strategy_lists) num_profiles *= list.size();

  std::vector<double> payoffs;
  payoffs.reserve(num_profiles * static_cast<std::size_t>(spec.num_players));
  QuantumStrategyProfile tau(static_cast<std::size_t>(spec.num_qubits),
                             QubitMove::sigma(0));
  for (std::size_t idx = 0; idx < num_profiles; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = strategy_lists.size(); i-- > 0;) {
      const PlayerStrategy& s = strategy_lists[i][rest % strategy_lists[i].size()];
      rest /= strategy_lists[i].size();
      for (std::size_t k = 0; k < s.size(); ++k)
        tau[static_cast<std::size_t>(qubits[i][k])] = s[k];
    }
    const std::vector<double> e = payoff(spec, tau);
    payoffs.insert(payoffs.end(), e.begin(), e.end());
  }
  return NormalForm(std::move(labels), std::move(payoffs));
}

std::vector<std::vector<PlayerStrategy>> pauli_strategy_lists(
    const QuantumGameSpec& spec) {
  std::vector<std::vector<PlayerStrategy>> lists;
  for (int i = 1; i <= spec.num_players; ++i) {
    const std::vector<int> qubits = spec.assignment.qubits_of_player(i);
    const std::vector<std::size_t> pos = infoset_positions(spec.assignment, qubits);
    const std::size_t k = qubits.size();
    std::vector<PlayerStrategy> list;
    list.reserve(std::size_t{1} << k);
    for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
      PlayerStrategy strat;
      for (std::size_t idx = 0; idx < k; ++idx)
        strat.push_back(QubitMove::sigma(
            static_cast<int>((s >> (k - 1 - pos[idx])) & 1u)));
      list.push_back(std::move(strat));
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

IsomorphismCheck verify_isomorphism(const ExtensiveGame& game,
                                    const QuantumGameSpec& spec,
                                    const GameIsomorphism& iso, double eps) {
  const NormalForm nf = normal_representation(game);
  IsomorphismCheck check{true, 0.0};
  for (std::size_t idx = 0; idx < nf.num_profiles(); ++idx) {
    const std::vector<int> profile = nf.profile_from_index(idx);
    const auto u = nf.payoff_at(idx);
    const std::vector<double> e =
        payoff(spec, iso.map_profile(profile, spec.allowed_ops));
    for (int i = 0; i < nf.num_players(); ++i) {
      const double dev = std::abs(u[i] - e[static_cast<std::size_t>(i)]);
      check.max_deviation = std::max(check.max_deviation, dev);
    }
  }
  check.holds = check.max_deviation <= eps;
  return check;
}

std::vector<double> ewl_utility_closed_form(double theta1, double theta2,
                                            double theta3, double alpha3) {
  for (double t : {theta1, theta2, theta3})
    if (!(t >= 0.0 && t <= kPi)) throw DomainError("theta must lie in [0, pi]");
  if (!(alpha3 >= 0.0 && alpha3 <= kPi / 2.0))
    throw DomainError("alpha must lie in [0, pi/2]");

  const double c1 = std::cos(theta1 / 2), s1 = std::sin(theta1 / 2);
  const double c2 = std::cos(theta2 / 2), s2 = std::sin(theta2 / 2);
  const double c3 = std::cos(theta3 / 2), s3 = std::sin(theta3 / 2);
  const double C1 = c1 * c1, S1 = s1 * s1;
  const double C2 = c2 * c2, S2 = s2 * s2;
  const double C3 = c3 * c3, S3 = s3 * s3;
  const double CA = std::cos(alpha3) * std::cos(alpha3);
  const double SA = std::sin(alpha3) * std::sin(alpha3);

  const double e12 = 2.0 * (S1 * S2 * S3 + C1 * C2 * C3 * SA) +
                     C3 * CA * (3.0 * C1 + S1 * (2.0 + 3.0 * C2));
  const double e3 = C3 * CA * (2.0 * S1 * S2 + C1) +
                    C1 * C3 * SA * (1.0 + C2) + S1 * S3 * (1.0 + S2);
  return {e12, e12, e3};
}

std::vector<double> two_stage_expected_outcome(
    double theta1, double theta2, double theta3,
    const std::array<std::vector<double>, 4>& outcomes) {
  for (double t : {theta1, theta2, theta3})
    if (!(t >= 0.0 && t <= kPi)) throw DomainError("theta must lie in [0, pi]");
  for (const auto& o : outcomes)
    if (o.size() != 2) throw DomainError("outcome vectors must have length 2");

  const double C1 = std::cos(theta1 / 2) * std::cos(theta1 / 2);
  const double C2 = std::cos(theta2 / 2) * std::cos(theta2 / 2);
  const double C3 = std::cos(theta3 / 2) * std::cos(theta3 / 2);
  std::vector<double> e(2);
  for (std::size_t i = 0; i < 2; ++i)
    e[i] = (outcomes[0][i] * C2 + outcomes[1][i] * (1.0 - C2)) * C1 +
           (outcomes[2][i] * C3 + outcomes[3][i] * (1.0 - C3)) * (1.0 - C1);
  return e;
}

}  // namespace qgame
