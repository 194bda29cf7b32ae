#pragma once

#include <stdexcept>
#include <string>

namespace isofact {

// Base for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (generator lists, element literals, corpus lines).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a precondition: empty generator list, zero
// vector, gcd > 1, mismatched dimensions, invalid arrangement.
struct InvalidArgument : Error {
  using Error::Error;
};

// The question is well posed but cannot be answered within the configured
// limits, or the answer is an infinite set.
struct Infeasible : Error {
  using Error::Error;
};

struct Overflow : Infeasible {
  using Infeasible::Infeasible;
};

struct FiberTooLarge : Infeasible {
  using Infeasible::Infeasible;
};

// Operation defined only for simplicial semigroups.
struct NotSimplicial : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

// Operation needs a Betti profile certified complete.
struct IncompleteProfile : Infeasible {
  using Infeasible::Infeasible;
};

// A computed object disagrees with a structural identity it must satisfy.
struct InvariantBreach : Error {
  using Error::Error;
};

}  // namespace isofact
