#pragma once

#include <stdexcept>
#include <string>

namespace multgraph {

/// Invalid input: a precondition of a public operation does not hold.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// An algebraic identity that must hold did not (a bug, not bad input).
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A floating-point check (row sums, bounds) failed beyond its tolerance.
class NumericalConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void require(bool ok, const std::string &what) {
  if (!ok)
    throw DomainError(what);
}
inline void ensure(bool ok, const std::string &what) {
  if (!ok)
    throw InternalConsistencyError(what);
}
} // namespace detail

} // namespace multgraph
