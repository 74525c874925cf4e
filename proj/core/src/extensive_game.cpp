#include "qgame/extensive_game.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qgame {

namespace {

std::string path_display(const std::vector<ActionLabel>& path) {
  std::string out = "(";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += path[i].display;
  }
  out += ')';
  return out;
}

}  // namespace

void GameDocument::sort_children() {
  struct Rec {
    static void visit(Node& node) {
      if (node.is_leaf) return;
      std::sort(node.children.begin(), node.children.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& [label, child] : node.children) visit(child);
    }
  };
  Rec::visit(root);
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const ValidationIssue& issue : issues)
    out << issue.rule << " at " << issue.history << ": " << issue.detail << '\n';
  return out.str();
}

ValidationReport validate_game(const GameDocument& doc) {
  ValidationReport report;
  auto add = [&report](std::string rule, std::string where, std::string detail) {
    report.issues.push_back({std::move(rule), std::move(where), std::move(detail)});
  };

  if (doc.num_players < 1)
    add("player set", "()", "at least one player is required");

  struct SetInfo {
    int owner;
    std::array<std::string, 2> actions;
    std::string first_seen;
    bool arity_ok;
  };
  std::map<std::string, SetInfo> sets;

  struct Walker {
    const GameDocument& doc;
    ValidationReport& report;
    std::map<std::string, SetInfo>& sets;
    decltype(add)& add;

    void visit(const GameDocument::Node& node, std::vector<ActionLabel>& path) {
      const std::string where = path_display(path);
      if (node.is_leaf) {
        if (static_cast<int>(node.payoffs.size()) != doc.num_players)
          add("payoff arity", where,
              "expected " + std::to_string(doc.num_players) + " payoffs, got " +
                  std::to_string(node.payoffs.size()));
        return;
      }
      if (node.player < 1 || node.player > doc.num_players)
        add("player out of range", where,
            "player " + std::to_string(node.player));
      if (node.infoset.empty())
        add("partition incomplete", where,
            "node belongs to no information set of its owner");
      const bool two = node.children.size() == 2;
      if (!two)
        add("two-action violation", where,
            std::to_string(node.children.size()) + " actions (exactly 2 required)");

      if (!node.infoset.empty()) {
        std::array<std::string, 2> labels{};
        if (two) labels = {node.children[0].first, node.children[1].first};
        auto [it, inserted] =
            sets.try_emplace(node.infoset, SetInfo{node.player, labels, where, two});
        if (!inserted) {
          if (it->second.owner != node.player)
            add("owner mismatch", where,
                "information set '" + node.infoset + "' mixes players " +
                    std::to_string(it->second.owner) + " and " +
                    std::to_string(node.player));
          if (two && it->second.arity_ok && it->second.actions != labels)
            add("action-set mismatch", where,
                "information set '" + node.infoset + "' has actions {" + labels[0] +
                    "," + labels[1] + "} here but {" + it->second.actions[0] + "," +
                    it->second.actions[1] + "} at " + it->second.first_seen);
        }
      }

      int index = 0;
      for (const auto& [label, child] : node.children) {
        path.push_back({index, label});
        visit(child, path);
        path.pop_back();
        ++index;
      }
    }
  };

  std::vector<ActionLabel> path;
  Walker{doc, report, sets, add}.visit(doc.root, path);
  return report;
}

std::string History::to_string() const { return path_display(actions_); }

int PureStrategy::action_at(const std::vector<const InformationSet*>& sets,
                            const std::string& infoset_id) const {
  for (std::size_t k = 0; k < sets.size(); ++k)
    if (sets[k]->id == infoset_id) return actions[k];
  throw Error("strategy does not cover information set '" + infoset_id + "'");
}

ExtensiveGame ExtensiveGame::from_document(GameDocument doc) {
  doc.sort_children();
  ValidationReport report = validate_game(doc);
  if (!report.ok())
    throw Error("invalid extensive game:\n" + report.to_string());

  ExtensiveGame game;
  game.doc_ = std::make_shared<const GameDocument>(std::move(doc));

  std::map<std::string, std::size_t> set_index;
  struct Walker {
    ExtensiveGame& game;
    std::map<std::string, std::size_t>& set_index;

    void visit(const GameDocument::Node& node, std::vector<ActionLabel>& path) {
      if (node.is_leaf) {
        game.terminals_.emplace_back(path);
        return;
      }
      auto it = set_index.find(node.infoset);
      if (it == set_index.end()) {
        it = set_index.emplace(node.infoset, game.info_sets_.size()).first;
        game.info_sets_.push_back(
            {node.infoset, node.player,
             {node.children[0].first, node.children[1].first}, {}});
      }
      game.info_sets_[it->second].members.emplace_back(path);

      int index = 0;
      for (const auto& [label, child] : node.children) {
        path.push_back({index, label});
        visit(child, path);
        path.pop_back();
        ++index;
      }
    }
  };
  std::vector<ActionLabel> path;
  Walker{game, set_index}.visit(game.doc_->root, path);

  std::sort(game.info_sets_.begin(), game.info_sets_.end(),
            [](const InformationSet& a, const InformationSet& b) {
              return std::tie(a.owner, a.id) < std::tie(b.owner, b.id);
            });
  return game;
}

std::vector<const InformationSet*> ExtensiveGame::information_sets(int player) const {
  std::vector<const InformationSet*> out;
  for (const InformationSet& s : info_sets_)
    if (s.owner == player) out.push_back(&s);
  return out;  // info_sets_ is (owner, id)-sorted, so this is id-sorted
}

const std::vector<double>& ExtensiveGame::payoffs_at(const History& terminal) const {
  const GameDocument::Node* node = &doc_->root;
  for (const ActionLabel& a : terminal.actions()) {
    if (node->is_leaf || a.index < 0 ||
        a.index >= static_cast<int>(node->children.size()))
      throw Error("history " + terminal.to_string() + " is not in the game tree");
    node = &node->children[static_cast<std::size_t>(a.index)].second;
  }
  if (!node->is_leaf)
    throw Error("history " + terminal.to_string() + " is not terminal");
  return node->payoffs;
}

std::string ExtensiveGame::strategy_display(const PureStrategy& s) const {
  auto sets = information_sets(s.owner);
  if (sets.empty()) return "-";
  std::string out;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    if (k) out += '+';
    out += sets[k]->actions[static_cast<std::size_t>(s.actions[k])];
  }
  return out;
}

History outcome(const ExtensiveGame& game, const std::vector<PureStrategy>& profile) {
  if (static_cast<int>(profile.size()) != game.num_players())
    throw DimensionError("profile must contain one strategy per player");
  for (int i = 1; i <= game.num_players(); ++i) {
    const PureStrategy& s = profile[static_cast<std::size_t>(i - 1)];
    if (s.owner != i)
      throw Error("profile strategies must be ordered by player id");
    if (s.actions.size() != game.information_sets(i).size())
      throw DimensionError("strategy does not cover player " + std::to_string(i) +
                           "'s information sets");
  }

  std::vector<ActionLabel> path;
  const GameDocument::Node* node = &game.doc_->root;
  while (!node->is_leaf) {
    const PureStrategy& s = profile[static_cast<std::size_t>(node->player - 1)];
    const int choice = s.action_at(game.information_sets(node->player), node->infoset);
    path.push_back({choice, node->children[static_cast<std::size_t>(choice)].first});
    node = &node->children[static_cast<std::size_t>(choice)].second;
  }
  return History(std::move(path));
}

std::vector<PureStrategy> enumerate_pure_strategies(const ExtensiveGame& game,
                                                    int player) {
  if (player < 1 || player > game.num_players())
    throw DomainError("no such player: " + std::to_string(player));
  const std::size_t k = game.information_sets(player).size();
  std::vector<PureStrategy> out;
  out.reserve(std::size_t{1} << k);
  for (std::size_t s = 0; s < (std::size_t{1} << k); ++s) {
    PureStrategy strat{player, std::vector<int>(k)};
    for (std::size_t pos = 0; pos < k; ++pos)
      strat.actions[pos] = static_cast<int>((s >> (k - 1 - pos)) & 1u);
    out.push_back(std::move(strat));
  }
  return out;
}

}  // namespace qgame
