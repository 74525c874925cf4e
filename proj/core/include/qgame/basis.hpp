#pragma once

#include <cstddef>
#include <vector>

#include "qgame/state_vector.hpp"

namespace qgame {

enum class BasisKind { Computational, EwlEntangled };

// An orthonormal basis of the m-qubit space, stored as 2^m explicit
// state vectors ordered by basis label.
class Basis {
 public:
  static Basis computational(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return vectors_.size(); }
  BasisKind kind() const { return kind_; }
  const StateVector& vector(std::size_t label_index) const {
    return vectors_[label_index];
  }

  friend Basis ewl_basis(int num_qubits);

 private:
  Basis(int num_qubits, BasisKind kind, std::vector<StateVector> vectors);

  int num_qubits_;
  BasisKind kind_;
  std::vector<StateVector> vectors_;
};

// The entangled basis |psi_x> = (|x> + i|x-bar>)/sqrt(2) for all labels x.
Basis ewl_basis(int num_qubits);

// p_j = |<b_j|psi>|^2 for every basis vector, indexed by basis label.
std::vector<double> measurement_probabilities(const StateVector& psi,
                                              const Basis& basis);

}  // namespace qgame
