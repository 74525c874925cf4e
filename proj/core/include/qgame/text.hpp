#pragma once

#include <string>
#include <vector>

#include "qgame/quantum_game.hpp"

namespace qgame {

// Parses an angle literal: "pi", "pi/2", "3pi/4", "0.75", "1.5708".
double parse_angle(const std::string& text);

// Formats an angle as a pi fraction when one matches within 1e-12
// (denominators up to 24), otherwise as a 12-significant-digit decimal.
std::string format_angle(double value);

// 12 significant digits, plain "%.12g".
std::string format_number(double value);

// Parses a semicolon-separated per-qubit profile: "s0"/"s1" entries for
// sigma moves, "theta" or "theta,alpha" angle entries otherwise. Each entry
// is checked against the qubit's declared family; violations throw
// StrategyError naming the qubit (1-based).
QuantumStrategyProfile parse_profile(const std::string& text,
                                     const QuantumGameSpec& spec);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace qgame
