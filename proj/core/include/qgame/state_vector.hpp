#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qgame/types.hpp"

namespace qgame {

// A computational-basis label x1 x2 ... xm with x1 the most significant bit,
// matching the left-to-right order of ket notation.
class BasisLabel {
 public:
  explicit BasisLabel(std::vector<int> bits);
  static BasisLabel from_index(std::size_t index, int num_qubits);
  static BasisLabel from_string(const std::string& bits);  // e.g. "010"

  int num_qubits() const { return static_cast<int>(bits_.size()); }
  int bit(int j) const { return bits_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& bits() const { return bits_; }

  // Lexicographic index of the label: sum of x_j * 2^(m-1-j).
  std::size_t index() const;

  BasisLabel flipped() const;        // all bits negated
  BasisLabel with_flip(int j) const; // bit j negated

  std::string to_string() const;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;

 private:
  std::vector<int> bits_;
};

// Unit vector of 2^m complex amplitudes indexed by basis label.
class StateVector {
 public:
  // Validates the dimension, finiteness and normalization of `amplitudes`.
  StateVector(int num_qubits, std::vector<Complex> amplitudes,
              double norm_tolerance = tol::algebraic);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
  const Complex& amplitude(const BasisLabel& label) const;
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  double norm() const;

 private:
  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

// |label> as a state of `num_qubits` qubits.
StateVector basis_state(const BasisLabel& label, int num_qubits);

// Sum over x of conj(bra_x) * ket_x.
Complex inner_product(const StateVector& bra, const StateVector& ket);

// cos(gamma/2)|0...0> + i sin(gamma/2)|1...1> on m qubits, gamma in [0, pi].
StateVector mw_initial_state(double gamma, int num_qubits);

}  // namespace qgame
