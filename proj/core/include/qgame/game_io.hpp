#pragma once

#include <iosfwd>
#include <string>

#include "qgame/extensive_game.hpp"
#include "qgame/quantum_game.hpp"

namespace qgame {

// Parses the JSON game document:
//   { "players": [1, 2, 3],
//     "root": { "player": 1, "infoset": "I1",
//               "children": { "a0": {...}, "a1": {...} } } }
// with leaves { "payoffs": [3, 3, 1] }. Shape problems throw ParseError
// (with the byte position when available); semantic problems are left to
// validate_game.
GameDocument parse_game_document(const std::string& text);
GameDocument read_game_document(const std::string& path);

// Serializes a document back to its JSON form (2-space indent, sorted keys,
// trailing newline). Round-trips bit-identically through the parser.
std::string write_game_document(const GameDocument& doc);

// Textual form of a six-tuple: scheme name, gamma or family table, zeta and
// xi, and the coefficient table keyed by bitstring labels.
std::string dump_spec(const QuantumGameSpec& spec);

}  // namespace qgame
