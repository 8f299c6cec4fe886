#pragma once

#include <stdexcept>
#include <string>

namespace apkit {

/// Bad user input: malformed tables, unknown names, schema mismatches.
/// The CLI maps this family to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An evaluator turned out to be partial on a product some checker formed.
class TotalityError : public InputError {
 public:
  explicit TotalityError(const std::string& what) : InputError(what) {}
};

/// A declared size cap was exceeded (e.g. the C_beta enumeration cap).
class SizeCapError : public InputError {
 public:
  explicit SizeCapError(const std::string& what) : InputError(what) {}
};

/// Caller violated an operation's contract (e.g. abelian-only check on a
/// non-abelian model).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what)
      : std::logic_error(what) {}
};

/// A constructed certificate failed its own re-verification. The underlying
/// lemmas guarantee success, so this signals an implementation bug rather
/// than bad input.
class TransformVerificationError : public std::logic_error {
 public:
  explicit TransformVerificationError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace apkit
