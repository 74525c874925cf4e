#include "qgame/basis.hpp"

#include <cmath>

namespace qgame {

Basis::Basis(int num_qubits, BasisKind kind, std::vector<StateVector> vectors)
    : num_qubits_(num_qubits), kind_(kind), vectors_(std::move(vectors)) {}

Basis Basis::computational(int num_qubits) {
  if (num_qubits < 1) throw DimensionError("num_qubits must be >= 1");
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<StateVector> vectors;
  vectors.reserve(dim);
  for (std::size_t x = 0; x < dim; ++x)
    vectors.push_back(basis_state(BasisLabel::from_index(x, num_qubits), num_qubits));
  return Basis(num_qubits, BasisKind::Computational, std::move(vectors));
}

Basis ewl_basis(int num_qubits) {
  if (num_qubits < 1) throw DimensionError("num_qubits must be >= 1");
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<StateVector> vectors;
  vectors.reserve(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[x] = Complex{inv_sqrt2, 0.0};
    amps[(dim - 1) ^ x] += Complex{0.0, inv_sqrt2};  // i|x-bar>
    vectors.emplace_back(num_qubits, std::move(amps));
  }
  return Basis(num_qubits, BasisKind::EwlEntangled, std::move(vectors));
}

std::vector<double> measurement_probabilities(const StateVector& psi,
                                              const Basis& basis) {
  if (psi.num_qubits() != basis.num_qubits())
    throw DimensionError("state and basis dimensions differ");
  std::vector<double> probs(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    probs[j] = std::norm(inner_product(basis.vector(j), psi));
  return probs;
}

}  // namespace qgame
