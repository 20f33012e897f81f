#ifndef SCHURCERT_ERRORS_HPP
#define SCHURCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schurcert {

/// Base class for all schurcert errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonSquare : public Error {
public:
  explicit NonSquare(const std::string& msg) : Error(msg) {}
};

class ShapeMismatch : public Error {
public:
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

class NonFinite : public Error {
public:
  explicit NonFinite(const std::string& msg) : Error(msg) {}
};

/// Relative asymmetry of the input exceeds sym_tol.
class AsymmetricInput : public Error {
public:
  explicit AsymmetricInput(const std::string& msg) : Error(msg) {}
};

class NotSelfAdjoint : public Error {
public:
  explicit NotSelfAdjoint(const std::string& msg) : Error(msg) {}
};

/// Inversion gate failed; carries the offending singular-value ratio
/// (smallest/largest) and the name of the unit that failed.
class NumericallySingular : public Error {
public:
  NumericallySingular(const std::string& unit, double ratio)
      : Error("numerically singular unit " + unit +
              " (singular-value ratio " + std::to_string(ratio) + ")"),
        unit_(unit), ratio_(ratio) {}
  const std::string& unit() const { return unit_; }
  double ratio() const { return ratio_; }

private:
  std::string unit_;
  double ratio_;
};

class NoConvergence : public Error {
public:
  explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

class OrderTooSmall : public Error {
public:
  explicit OrderTooSmall(const std::string& msg) : Error(msg) {}
};

class NotBidiagonal : public Error {
public:
  explicit NotBidiagonal(const std::string& msg) : Error(msg) {}
};

class NonFiniteEvaluation : public Error {
public:
  explicit NonFiniteEvaluation(const std::string& msg) : Error(msg) {}
};

}  // namespace schurcert

#endif
