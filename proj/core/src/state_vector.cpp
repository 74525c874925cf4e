#include "qgame/state_vector.hpp"

#include <cmath>
#include <numeric>

namespace qgame {

BasisLabel::BasisLabel(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw DimensionError("basis label must have at least one bit");
  for (int b : bits_)
    if (b != 0 && b != 1) throw DomainError("basis label bits must be 0 or 1");
}

BasisLabel BasisLabel::from_index(std::size_t index, int num_qubits) {
  if (num_qubits < 1) throw DimensionError("num_qubits must be >= 1");
  if (index >= (std::size_t{1} << num_qubits))
    throw DimensionError("basis label index out of range");
  std::vector<int> bits(static_cast<std::size_t>(num_qubits));
  for (int j = 0; j < num_qubits; ++j)
    bits[static_cast<std::size_t>(j)] =
        static_cast<int>((index >> (num_qubits - 1 - j)) & 1u);
  return BasisLabel(std::move(bits));
}

BasisLabel BasisLabel::from_string(const std::string& text) {
  std::vector<int> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw DomainError("basis label string must be binary");
    bits.push_back(c - '0');
  }
  return BasisLabel(std::move(bits));
}

std::size_t BasisLabel::index() const {
  std::size_t idx = 0;
  for (int b : bits_) idx = (idx << 1) | static_cast<std::size_t>(b);
  return idx;
}

BasisLabel BasisLabel::flipped() const {
  std::vector<int> bits(bits_);
  for (int& b : bits) b = 1 - b;
  return BasisLabel(std::move(bits));
}

BasisLabel BasisLabel::with_flip(int j) const {
  if (j < 0 || j >= num_qubits()) throw DimensionError("bit index out of range");
  std::vector<int> bits(bits_);
  bits[static_cast<std::size_t>(j)] = 1 - bits[static_cast<std::size_t>(j)];
  return BasisLabel(std::move(bits));
}

std::string BasisLabel::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (int b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes,
                         double norm_tolerance)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1) throw DimensionError("state must have at least one qubit");
  if (amplitudes_.size() != (std::size_t{1} << num_qubits_))
    throw DimensionError("amplitude count must be 2^num_qubits");
  double sq = 0.0;
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw DomainError("amplitudes must be finite");
    sq += std::norm(a);
  }
  if (std::abs(sq - 1.0) > norm_tolerance)
    throw DomainError("state vector is not normalized");
}

const Complex& StateVector::amplitude(const BasisLabel& label) const {
  if (label.num_qubits() != num_qubits_)
    throw DimensionError("label length does not match qubit count");
  return amplitudes_[label.index()];
}

double StateVector::norm() const {
  double sq = 0.0;
  for (const Complex& a : amplitudes_) sq += std::norm(a);
  return std::sqrt(sq);
}

StateVector basis_state(const BasisLabel& label, int num_qubits) {
  if (label.num_qubits() != num_qubits)
    throw DimensionError("label length does not match qubit count");
  std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps[label.index()] = Complex{1.0, 0.0};
  return StateVector(num_qubits, std::move(amps));
}

Complex inner_product(const StateVector& bra, const StateVector& ket) {
  if (bra.num_qubits() != ket.num_qubits())
    throw DimensionError("inner product requires equal dimensions");
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < bra.dim(); ++i)
    sum += std::conj(bra[i]) * ket[i];
  return sum;
}

StateVector mw_initial_state(double gamma, int num_qubits) {
  constexpr double pi = 3.14159265358979323846;
  if (!(gamma >= 0.0 && gamma <= pi))
    throw DomainError("gamma must lie in [0, pi]");
  std::vector<Complex> amps(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amps.front() = Complex{std::cos(gamma / 2.0), 0.0};
  amps.back() = Complex{0.0, std::sin(gamma / 2.0)};
  return StateVector(num_qubits, std::move(amps));
}

}  // namespace qgame
