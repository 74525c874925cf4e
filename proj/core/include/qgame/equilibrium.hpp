#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qgame/normal_form.hpp"
#include "qgame/quantum_game.hpp"

namespace qgame {

// Discretization of continuous operator families: candidate angles per
// qubit. Defaults cover every angle used by the studied equilibria.
struct GridSpec {
  std::vector<std::vector<double>> theta_points;  // per qubit
  std::vector<std::vector<double>> alpha_points;  // per qubit; used by TwoParameter

  // theta in {k pi/8 : k = 0..8}, alpha in {k pi/8 : k = 0..4}.
  static GridSpec defaults(const QuantumGameSpec& spec);
  // Same lists on every qubit.
  static GridSpec uniform(const QuantumGameSpec& spec,
                          std::vector<double> thetas,
                          std::vector<double> alphas);
};

struct EquilibriumEntry {
  std::vector<int> profile;          // strategy index per player
  std::string display;               // "a0;b1;c0"
  std::vector<double> payoffs;
};

struct EquilibriumReport {
  std::vector<EquilibriumEntry> equilibria;  // ascending profile index
  double eps = 0.0;
  std::size_t profiles_examined = 0;
  bool grid_relative = false;  // a grid NE need not be a continuum NE
};

// Exhaustive weak-inequality Nash test: a profile is listed iff no
// unilateral deviation improves the deviating player by more than eps.
EquilibriumReport pure_nash(const NormalForm& nf, double eps = tol::equilibrium);

// All strategies of `player` within eps of their best payoff against the
// fixed opponent profile (the player's own entry in `profile` is ignored).
std::vector<int> best_response_set(const NormalForm& nf, int player,
                                   std::span<const int> profile,
                                   double eps = tol::equilibrium);

// Joint best responses of a set of players maximizing their common payoff
// against the remaining fixed strategies. Listed players must share payoffs
// at the compared profiles (maximization uses the first listed player).
std::vector<std::vector<int>> joint_best_response_set(
    const NormalForm& nf, std::span<const int> players,
    std::span<const int> profile, double eps = tol::equilibrium);

// Whether one sigma-pair profile (bit per qubit) is an equilibrium of the
// MW table, per gamma value.
std::vector<std::pair<double, bool>> nash_condition_region(
    const std::function<QuantumGameSpec(double)>& spec_builder,
    std::span<const int> pauli_profile, std::span<const double> gamma_grid,
    double eps = tol::equilibrium);

// pure_nash over the induced strategic game restricted to grid profiles.
// Results are grid-relative.
EquilibriumReport grid_nash(const QuantumGameSpec& spec, const GridSpec& grid,
                            double eps = tol::equilibrium);

struct SweepRow {
  double gamma = 0.0;
  EquilibriumReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // gamma strictly increasing
};

// Pure equilibria of the MW sigma-pair table for every gamma in the grid.
SweepResult mw_equilibrium_sweep(const ExtensiveGame& game,
                                 std::span<const double> gammas,
                                 double eps = tol::equilibrium);

struct RefinementResult {
  double delta = 0.0;
  // Classical pure equilibria whose canonical images stay equilibria of the
  // MW quantization at gamma = delta.
  std::vector<EquilibriumEntry> surviving;
};

// The gamma-perturbation refinement: approximates "holds out a slight
// perturbation of |psi_in(0)>" with a single small angle delta in (0, pi/2).
RefinementResult perturbation_refinement(const ExtensiveGame& game,
                                         double delta = 0.01,
                                         double eps = tol::equilibrium);

}  // namespace qgame
