#ifndef IETK_ERRORS_HPP
#define IETK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ietk {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct MixedFieldError : Error {
  MixedFieldError() : Error("operands lie in different quadratic fields") {}
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
};

struct OutOfDomainError : Error {
  explicit OutOfDomainError(const std::string& w = "point outside the domain")
      : Error(w) {}
};

struct CapExceededError : Error {
  explicit CapExceededError(const std::string& w = "iteration cap exceeded")
      : Error(w) {}
};

struct NotInGeneralPositionError : Error {
  int depth;  // induction depth at which the step became undefined
  explicit NotInGeneralPositionError(int depth_ = 0)
      : Error("Rauzy-Veech step undefined (delta+ == delta-) at depth " +
              std::to_string(depth_)),
        depth(depth_) {}
};

struct ReducibleError : Error {
  ReducibleError() : Error("permutation is reducible") {}
};

struct ZeroColumnError : Error {
  ZeroColumnError() : Error("matrix has a zero column sum") {}
};

struct NotPositiveError : Error {
  NotPositiveError() : Error("matrix is not strictly positive") {}
};

struct NotALoopError : Error {
  NotALoopError() : Error("step sequence does not return to the permutation") {}
};

struct DegreeTooHighError : Error {
  DegreeTooHighError()
      : Error("dominant eigenvalue is algebraic of degree > 2") {}
};

struct TowerNotFoundError : Error {
  int stage;
  explicit TowerNotFoundError(int stage_)
      : Error("no rigidity tower found at stage " + std::to_string(stage_)),
        stage(stage_) {}
};

struct PreconditionViolatedError : Error {
  explicit PreconditionViolatedError(const std::string& w)
      : Error("precondition violated: " + w) {}
};

struct OutOfRangeError : Error {
  explicit OutOfRangeError(const std::string& w = "index out of range")
      : Error(w) {}
};

struct InvalidParamsError : Error {
  explicit InvalidParamsError(const std::string& w) : Error(w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

}  // namespace ietk

#endif
