#pragma once

#include <array>
#include <span>

#include "qgame/state_vector.hpp"
#include "qgame/types.hpp"

namespace qgame {

// A 2x2 unitary operator. Construction checks U†U = I.
class Unitary2 {
 public:
  Unitary2(Complex e00, Complex e01, Complex e10, Complex e11,
           double tolerance = tol::algebraic);

  static Unitary2 identity();

  const Complex& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }

  Unitary2 adjoint() const;

  friend bool operator==(const Unitary2&, const Unitary2&) = default;

 private:
  std::array<std::array<Complex, 2>, 2> entries_;
};

// sigma_0 (identity) for k = 0, sigma_1 (bit flip) for k = 1.
Unitary2 pauli(int k);

// [[e^{ia} cos(t/2), i sin(t/2)], [i sin(t/2), e^{-ia} cos(t/2)]]
// with theta in [0, pi] and alpha in [0, pi/2]; `permissive` skips the
// range check.
Unitary2 u_theta_alpha(double theta, double alpha, bool permissive = false);

// (U_1 (x) ... (x) U_m) |psi>, with U_j acting on qubit j (1 = leftmost).
StateVector apply_product_operator(std::span<const Unitary2> ops,
                                   const StateVector& psi);

}  // namespace qgame
