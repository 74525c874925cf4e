#include "qgame/unitary.hpp"

#include <cmath>

namespace qgame {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Unitary2::Unitary2(Complex e00, Complex e01, Complex e10, Complex e11,
                   double tolerance)
    : entries_{{{e00, e01}, {e10, e11}}} {
  // U†U = I entrywise.
  const Complex d00 = std::conj(e00) * e00 + std::conj(e10) * e10;
  const Complex d01 = std::conj(e00) * e01 + std::conj(e10) * e11;
  const Complex d11 = std::conj(e01) * e01 + std::conj(e11) * e11;
  if (std::abs(d00 - Complex{1.0, 0.0}) > tolerance ||
      std::abs(d11 - Complex{1.0, 0.0}) > tolerance ||
      std::abs(d01) > tolerance)
    throw DomainError("matrix is not unitary");
}

Unitary2 Unitary2::identity() {
  return Unitary2{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
}

Unitary2 Unitary2::adjoint() const {
  return Unitary2{std::conj((*this)(0, 0)), std::conj((*this)(1, 0)),
                  std::conj((*this)(0, 1)), std::conj((*this)(1, 1))};
}

Unitary2 pauli(int k) {
  if (k == 0) return Unitary2::identity();
  if (k == 1) return Unitary2{{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  throw DomainError("pauli index must be 0 or 1");
}

Unitary2 u_theta_alpha(double theta, double alpha, bool permissive) {
  if (!permissive) {
    if (!(theta >= 0.0 && theta <= kPi))
      throw DomainError("theta must lie in [0, pi]");
    if (!(alpha >= 0.0 && alpha <= kPi / 2.0))
      throw DomainError("alpha must lie in [0, pi/2]");
  }
  if (!std::isfinite(theta) || !std::isfinite(alpha))
    throw DomainError("angles must be finite");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex phase{std::cos(alpha), std::sin(alpha)};
  return Unitary2{phase * c, Complex{0.0, s}, Complex{0.0, s}, std::conj(phase) * c};
}

StateVector apply_product_operator(std::span<const Unitary2> ops,
                                   const StateVector& psi) {
  const int m = psi.num_qubits();
  if (static_cast<int>(ops.size()) != m)
    throw DimensionError("operator count must equal qubit count");

  std::vector<Complex> amps(psi.amplitudes().begin(), psi.amplitudes().end());
  for (int j = 0; j < m; ++j) {
    const Unitary2& u = ops[static_cast<std::size_t>(j)];
    const std::size_t weight = std::size_t{1} << (m - 1 - j);  // qubit 1 is leftmost
    for (std::size_t base = 0; base < amps.size(); ++base) {
      if (base & weight) continue;
      const Complex a0 = amps[base];
      const Complex a1 = amps[base | weight];
      amps[base] = u(0, 0) * a0 + u(0, 1) * a1;
      amps[base | weight] = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  return StateVector(m, std::move(amps), tol::accumulated);
}

}  // namespace qgame
