#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qgame/types.hpp"

namespace qgame {

// Raw tree document for a finite extensive game. This is the mutable,
// possibly-invalid form that files parse into and that validate_game
// inspects; ExtensiveGame is the validated, immutable product.
//
// Internal nodes list their children sorted by action label; the
// lexicographically smaller label is action index 0.
struct GameDocument {
  struct Node {
    bool is_leaf = false;
    // internal nodes
    int player = 0;
    std::string infoset;
    std::vector<std::pair<std::string, Node>> children;  // label-sorted
    // leaves
    std::vector<double> payoffs;
  };

  int num_players = 0;
  Node root;

  void sort_children();  // restores the label-sorted invariant recursively
};

struct ValidationIssue {
  std::string rule;     // e.g. "two-action violation"
  std::string history;  // path of the offending node, "()" for the root
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;  // one line per issue
};

// Checks the structural conditions of a finite extensive game: exactly two
// actions per information set, consistent ownership and action sets inside
// each information set, payoff arity, and player ids within the declared
// set. Prefix closure holds by construction of the tree document.
ValidationReport validate_game(const GameDocument& doc);

// One step of a history: the action index at a node plus its display label.
struct ActionLabel {
  int index = 0;
  std::string display;
  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
};

// A history is a path of actions from the root. Equality compares the
// action-index path.
class History {
 public:
  History() = default;
  explicit History(std::vector<ActionLabel> actions) : actions_(std::move(actions)) {}

  const std::vector<ActionLabel>& actions() const { return actions_; }
  bool empty() const { return actions_.empty(); }
  std::size_t size() const { return actions_.size(); }

  std::string to_string() const;  // "(a0,c1)", "()" for the root

  friend bool operator==(const History& a, const History& b) {
    if (a.actions_.size() != b.actions_.size()) return false;
    for (std::size_t i = 0; i < a.actions_.size(); ++i)
      if (a.actions_[i].index != b.actions_[i].index) return false;
    return true;
  }

 private:
  std::vector<ActionLabel> actions_;
};

struct InformationSet {
  std::string id;
  int owner = 0;
  std::array<std::string, 2> actions;  // display labels, index order
  std::vector<History> members;        // nonterminal member histories
};

// One player's contingent plan: an action index for each of the player's
// information sets, aligned with ExtensiveGame::information_sets(owner).
struct PureStrategy {
  int owner = 0;
  std::vector<int> actions;

  int action_at(const std::vector<const InformationSet*>& sets,
                const std::string& infoset_id) const;
};

// A validated finite extensive game without chance moves and with two
// actions at every information set. Immutable; cheap to copy.
class ExtensiveGame {
 public:
  // Throws Error with the validation report text if the document is invalid.
  static ExtensiveGame from_document(GameDocument doc);

  int num_players() const { return doc_->num_players; }
  const GameDocument& document() const { return *doc_; }

  // All information sets sorted by (owner, id); this is also the default
  // qubit order used by quantization.
  const std::vector<InformationSet>& information_sets() const { return info_sets_; }
  // One player's information sets sorted by id.
  std::vector<const InformationSet*> information_sets(int player) const;

  const std::vector<History>& terminal_histories() const { return terminals_; }

  // Payoff vector at a terminal history.
  const std::vector<double>& payoffs_at(const History& terminal) const;

  std::string strategy_display(const PureStrategy& s) const;  // "b1+c0"

 private:
  ExtensiveGame() = default;

  std::shared_ptr<const GameDocument> doc_;
  std::vector<InformationSet> info_sets_;
  std::vector<History> terminals_;
  friend History outcome(const ExtensiveGame&, const std::vector<PureStrategy>&);
};

// The terminal history reached when every player follows their plan.
// `profile` holds one strategy per player, ordered by player id.
History outcome(const ExtensiveGame& game, const std::vector<PureStrategy>& profile);

// All 2^k contingent plans of a player, lexicographic over the player's
// information sets (first set most significant, action 0 before 1).
std::vector<PureStrategy> enumerate_pure_strategies(const ExtensiveGame& game,
                                                    int player);

}  // namespace qgame
