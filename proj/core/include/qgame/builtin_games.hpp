#pragma once

#include <array>
#include <vector>

#include "qgame/extensive_game.hpp"

namespace qgame {

// Selten's Horse with modified payoffs: three players, one information set
// each; player 3's set contains the histories (a0) and (a1,b0).
ExtensiveGame selten_horse();

// Two-stage perfect-information game: player 1 moves first, player 2 owns
// one information set after each of player 1's actions. `outcomes` are the
// payoff vectors at the four leaves in order O00, O01, O10, O11; each must
// have length 2.
ExtensiveGame two_stage(const std::array<std::vector<double>, 4>& outcomes);

}  // namespace qgame
