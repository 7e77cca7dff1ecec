#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finsemi {

/// Base class of every exception thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A constructor parameter is out of range (zmod(1), ntrunc(0, d), ...).
struct InvalidParam : Error {
  using Error::Error;
};

/// A structure was declared with one == zero.
struct IdentityCollapse : Error {
  using Error::Error;
};

/// An algebraic law failed during validation. `axiom` names the law,
/// `witness` holds the offending element indices (meaning depends on the law).
struct AxiomViolation : Error {
  std::string axiom;
  std::vector<int> witness;
  AxiomViolation(std::string axiom_name, std::vector<int> w, const std::string& what)
      : Error(what), axiom(std::move(axiom_name)), witness(std::move(w)) {}
};

/// Two operands belong to different parent structures.
struct ParentMismatch : Error {
  using Error::Error;
};

/// A predicate that requires a proper subset was given the whole structure.
struct NotProper : Error {
  using Error::Error;
};

/// An enumeration outgrew its configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// The ideal passed as a maximal ideal is not maximal.
struct NotMaximal : Error {
  using Error::Error;
};

/// Strict-mode subsemimodule product over a non-multiplication semimodule.
struct NotMultiplication : Error {
  using Error::Error;
};

/// The supplied element map is not a semimodule homomorphism.
struct NotAHomomorphism : Error {
  std::vector<int> witness;
  NotAHomomorphism(std::vector<int> w, const std::string& what)
      : Error(what), witness(std::move(w)) {}
};

/// An induced quotient table disagreed across class representatives.
/// Must not occur for validated inputs; signals an internal bug.
struct IllDefined : Error {
  using Error::Error;
};

/// Theorem id not present in the registry.
struct UnknownTheorem : Error {
  using Error::Error;
};

/// The instance lacks a part (homomorphism, T-set, ...) the check needs.
struct MissingInstancePart : Error {
  using Error::Error;
};

/// Malformed instance or catalog document.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace finsemi
