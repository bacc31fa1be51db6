#pragma once

#include <stdexcept>
#include <string>

namespace graysynth {

struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& what = "matrix is singular")
      : std::runtime_error(what) {}
};

struct NonLinearGate : std::runtime_error {
  explicit NonLinearGate(const std::string& what = "circuit contains a non-CNOT gate")
      : std::runtime_error(what) {}
};

struct UnsupportedGate : std::runtime_error {
  explicit UnsupportedGate(const std::string& what = "unsupported gate")
      : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
  explicit ArityMismatch(const std::string& what = "arity mismatch")
      : std::runtime_error(what) {}
};

struct ArityTooLarge : std::runtime_error {
  explicit ArityTooLarge(const std::string& what = "arity exceeds exhaustive bound")
      : std::runtime_error(what) {}
};

struct ZeroIndicator : std::runtime_error {
  explicit ZeroIndicator(const std::string& what = "zero indicator vector")
      : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
  explicit PreconditionViolated(const std::string& what = "precondition violated")
      : std::runtime_error(what) {}
};

struct InfeasibleParity : std::runtime_error {
  explicit InfeasibleParity(const std::string& what = "parity not in row space of encoder")
      : std::runtime_error(what) {}
};

struct NoCommonTarget : std::runtime_error {
  explicit NoCommonTarget(const std::string& what = "no index is set in every parity")
      : std::runtime_error(what) {}
};

struct MixedTargets : std::runtime_error {
  explicit MixedTargets(const std::string& what = "circuit is not fixed-target")
      : std::runtime_error(what) {}
};

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& what = "no network within length bound")
      : std::runtime_error(what) {}
};

struct TooManyQubits : std::runtime_error {
  explicit TooManyQubits(const std::string& what = "qubit count exceeds simulation bound")
      : std::runtime_error(what) {}
};

struct DuplicateParity : std::runtime_error {
  explicit DuplicateParity(const std::string& what = "duplicate parity in set")
      : std::runtime_error(what) {}
};

struct ZeroParity : std::runtime_error {
  explicit ZeroParity(const std::string& what = "zero parity in set")
      : std::runtime_error(what) {}
};

struct UndeclaredWire : std::runtime_error {
  explicit UndeclaredWire(const std::string& name)
      : std::runtime_error("undeclared wire \"" + name + "\"") {}
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

}  // namespace graysynth
