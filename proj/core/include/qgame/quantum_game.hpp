#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgame/basis.hpp"
#include "qgame/extensive_game.hpp"
#include "qgame/normal_form.hpp"
#include "qgame/state_vector.hpp"
#include "qgame/unitary.hpp"

namespace qgame {

// Operator family available on one qubit.
enum class OperatorFamily { PauliPair, OneParameter, TwoParameter, FullSU2 };

std::string family_name(OperatorFamily f);

// One unitary move on one qubit, tagged with how it was specified so that
// family conformance can be checked.
class QubitMove {
 public:
  static QubitMove sigma(int k);                            // sigma_0 / sigma_1
  static QubitMove angles(double theta, double alpha = 0.0);  // U(theta, alpha)
  static QubitMove arbitrary(const Unitary2& u);            // FullSU2 only

  Unitary2 unitary() const;
  bool conforms(OperatorFamily family) const;
  std::string to_string() const;  // "s1", "pi/2", "pi/2,pi/4", "su2"

  bool is_sigma() const { return kind_ == Kind::Sigma; }
  int sigma_index() const { return sigma_; }
  bool is_angles() const { return kind_ == Kind::Angles; }
  double theta() const { return theta_; }
  double alpha() const { return alpha_; }

 private:
  enum class Kind { Sigma, Angles, Arbitrary };
  QubitMove() = default;

  Kind kind_ = Kind::Sigma;
  int sigma_ = 0;
  double theta_ = 0.0, alpha_ = 0.0;
  std::optional<Unitary2> explicit_u_;
};

// One unitary per qubit, in qubit order.
using QuantumStrategyProfile = std::vector<QubitMove>;

// zeta: qubit -> information set (a bijection onto all information sets of
// the source game); xi = P o zeta assigns each qubit to the player who
// moves at that set. Qubits are 0-based internally, 1-based in displays.
struct QubitAssignment {
  std::vector<std::string> infoset_of_qubit;  // zeta
  std::vector<int> player_of_qubit;           // xi

  int num_qubits() const { return static_cast<int>(player_of_qubit.size()); }
  std::vector<int> qubits_of_player(int player) const;  // ascending
};

// E_i = sum over basis labels b of v_i(b) * |<b|psi_fin>|^2.
struct PayoffFunctional {
  Basis basis;
  std::vector<std::vector<double>> coefficients;  // [player-1][label index]
};

enum class SchemeKind { MW, EWL };

// Scheme selection for quantize(): MW carries the entanglement angle gamma;
// EWL carries a per-player operator family (default OneParameter).
struct Scheme {
  SchemeKind kind = SchemeKind::MW;
  double gamma = 0.0;
  std::map<int, OperatorFamily> families;  // EWL, by player id

  static Scheme mw(double gamma_angle);
  static Scheme ewl(std::map<int, OperatorFamily> per_player = {});
};

// The six-tuple (H, N, |psi_in>, xi, {U_j}, {E_i}).
struct QuantumGameSpec {
  SchemeKind scheme = SchemeKind::MW;
  double gamma = 0.0;  // MW only
  int num_qubits = 0;
  int num_players = 0;
  StateVector initial_state;
  QubitAssignment assignment;
  std::vector<OperatorFamily> allowed_ops;  // per qubit
  PayoffFunctional payoff_functional;
};

// Per-player bijection between classical pure strategies and per-qubit bit
// assignments. `bits_for(player, strategy_index)` gives the bit placed on
// each of the player's qubits, in ascending qubit order.
class GameIsomorphism {
 public:
  static GameIsomorphism canonical(const ExtensiveGame& game,
                                   const QubitAssignment& assignment);
  // Action 0 -> sigma_1, matching the game recovered at gamma = pi.
  static GameIsomorphism complemented(const ExtensiveGame& game,
                                      const QubitAssignment& assignment);

  const std::vector<int>& qubits_of_player(int player) const {
    return qubits_of_player_[static_cast<std::size_t>(player - 1)];
  }
  const std::vector<int>& bits_for(int player, std::size_t strategy_index) const {
    return bits_[static_cast<std::size_t>(player - 1)][strategy_index];
  }

  // Image of a classical profile: sigma moves on PauliPair qubits,
  // theta in {0, pi} moves elsewhere.
  QuantumStrategyProfile map_profile(std::span<const int> classical_profile,
                                     std::span<const OperatorFamily> families) const;

 private:
  static GameIsomorphism build(int num_players, const QubitAssignment& assignment,
                               bool complemented);

  std::vector<std::vector<int>> qubits_of_player_;
  std::vector<std::vector<std::vector<int>>> bits_;  // [player-1][strategy][k]
};

struct QuantizeResult {
  QuantumGameSpec spec;
  GameIsomorphism isomorphism;
};

// Builds the six-tuple for a valid two-action extensive game. zeta defaults
// to all information sets sorted by (player, id); `zeta_order` may override
// it with an explicit list of information-set ids.
QuantizeResult quantize(const ExtensiveGame& game, const Scheme& scheme,
                        const std::vector<std::string>& zeta_order = {});

// (x)_j U_j |psi_in>. Throws StrategyError when a move falls outside the
// declared family of its qubit.
StateVector final_state(const QuantumGameSpec& spec,
                        const QuantumStrategyProfile& tau);

// E_i(tau) for every player.
std::vector<double> payoff(const QuantumGameSpec& spec,
                           const QuantumStrategyProfile& tau);

// The moves one player applies to their qubits, ascending qubit order.
using PlayerStrategy = std::vector<QubitMove>;

// Full payoff tensor over finite per-player strategy lists.
NormalForm induced_strategic_game(
    const QuantumGameSpec& spec,
    const std::vector<std::vector<PlayerStrategy>>& strategy_lists);

// All sigma-pair strategies per player, ordered to align index-for-index
// with the classical enumeration under the canonical isomorphism.
std::vector<std::vector<PlayerStrategy>> pauli_strategy_lists(
    const QuantumGameSpec& spec);

struct IsomorphismCheck {
  bool holds = false;
  double max_deviation = 0.0;
};

// Verifies u'_i(s) = E_i(g(s)) for every pure classical profile s.
IsomorphismCheck verify_isomorphism(const ExtensiveGame& game,
                                    const QuantumGameSpec& spec,
                                    const GameIsomorphism& iso,
                                    double eps = 1e-9);

// Closed-form E_{1,2} and E_3 of the EWL Selten's Horse game at the profile
// (theta1, theta2, (theta3, alpha3)); the cross-check oracle for payoff().
std::vector<double> ewl_utility_closed_form(double theta1, double theta2,
                                            double theta3, double alpha3);

// Closed-form expected outcome of the quantized two-stage game under
// one-parameter strategies.
std::vector<double> two_stage_expected_outcome(
    double theta1, double theta2, double theta3,
    const std::array<std::vector<double>, 4>& outcomes);

}  // namespace qgame
