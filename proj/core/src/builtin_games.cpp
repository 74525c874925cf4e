#include "qgame/builtin_games.hpp"

namespace qgame {

namespace {

GameDocument::Node leaf(std::vector<double> payoffs) {
  GameDocument::Node node;
  node.is_leaf = true;
  node.payoffs = std::move(payoffs);
  return node;
}

GameDocument::Node internal(int player, std::string infoset,
                            std::pair<std::string, GameDocument::Node> a,
                            std::pair<std::string, GameDocument::Node> b) {
  GameDocument::Node node;
  node.player = player;
  node.infoset = std::move(infoset);
  node.children.push_back(std::move(a));
  node.children.push_back(std::move(b));
  return node;
}

}  // namespace

ExtensiveGame selten_horse() {
  GameDocument doc;
  doc.num_players = 3;
  doc.root = internal(
      1, "I1",
      {"a0", internal(3, "I3", {"c0", leaf({3, 3, 1})}, {"c1", leaf({0, 0, 0})})},
      {"a1", internal(2, "I2",
                      {"b0", internal(3, "I3", {"c0", leaf({5, 5, 0})},
                                      {"c1", leaf({0, 0, 1})})},
                      {"b1", leaf({2, 2, 2})})});
  return ExtensiveGame::from_document(std::move(doc));
}

ExtensiveGame two_stage(const std::array<std::vector<double>, 4>& outcomes) {
  for (const auto& o : outcomes)
    if (o.size() != 2)
      throw DomainError("two_stage outcome vectors must have length 2");
  GameDocument doc;
  doc.num_players = 2;
  doc.root = internal(
      1, "I1",
      {"a0", internal(2, "I2a", {"b0", leaf(outcomes[0])}, {"b1", leaf(outcomes[1])})},
      {"a1", internal(2, "I2b", {"c0", leaf(outcomes[2])}, {"c1", leaf(outcomes[3])})});
  return ExtensiveGame::from_document(std::move(doc));
}

}  // namespace qgame
