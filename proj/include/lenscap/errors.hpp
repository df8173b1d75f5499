#pragma once

#include <stdexcept>
#include <string>

namespace lenscap {

// Base class for every violated precondition in the library. The CLI maps
// these to exit code 1 and prints what() on the diagnostic stream.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

struct ZeroOverZero : DomainError {
  ZeroOverZero() : DomainError("0/0 does not denote an extended rational") {}
};

struct NegativeInput : DomainError {
  explicit NegativeInput(const std::string& w) : DomainError(w) {}
};

struct InfinityInput : DomainError {
  explicit InfinityInput(const std::string& w) : DomainError(w) {}
};

struct IndeterminateForm : DomainError {
  IndeterminateForm() : DomainError("matrix application hit the indeterminate form 0/0") {}
};

struct OddP : DomainError {
  OddP() : DomainError("p must be even: L(p,q) contains a closed non-orientable surface only when p is even") {}
};

struct NotCoprime : DomainError {
  NotCoprime() : DomainError("p and q must be coprime") {}
};

struct QZeroModP : DomainError {
  QZeroModP() : DomainError("q must be nonzero modulo p") {}
};

struct RootHasNoMother : DomainError {
  RootHasNoMother() : DomainError("0/1 is the root of the tree and has no mother") {}
};

struct NotAVertex : DomainError {
  explicit NotAVertex(const std::string& w = "not a tree vertex: the numerator must be even and the value finite")
      : DomainError(w) {}
};

struct BadT : DomainError {
  explicit BadT(const std::string& w) : DomainError(w) {}
};

struct NonPositive : DomainError {
  explicit NonPositive(const std::string& w) : DomainError(w) {}
};

struct BadHighlight : DomainError {
  explicit BadHighlight(const std::string& w) : DomainError(w) {}
};

struct PathTooLong : DomainError {
  explicit PathTooLong(const std::string& w) : DomainError(w) {}
};

}  // namespace lenscap
