#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qgame {

using Complex = std::complex<double>;

namespace tol {
// Default tolerance for algebraic identities (unitarity, normalization,
// orthonormality) and for quantities accumulated over tensor products.
inline constexpr double algebraic = 1e-12;
inline constexpr double accumulated = 1e-10;
// Default slack for weak-inequality equilibrium tests.
inline constexpr double equilibrium = 1e-9;
}  // namespace tol

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mismatched vector/operator dimensions or label lengths.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A numeric argument outside its documented range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A strategy that does not conform to the declared operator family.
class StrategyError : public Error {
 public:
  using Error::Error;
};

// A game that the quantization scheme cannot represent.
class UnsupportedGameError : public Error {
 public:
  using Error::Error;
};

// Malformed input document; `position` is a byte offset when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, long position = -1)
      : Error(what), position_(position) {}
  long position() const { return position_; }

 private:
  long position_;
};

}  // namespace qgame
