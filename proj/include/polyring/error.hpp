#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyring {

enum class ErrorKind {
  invalid_parameter,
  axiom_violation,
  unsupported_structure,
  not_injective,
  not_homomorphic,
  ring_mismatch,
  not_a_field,
  incomplete_set,
  syntax_error,
  unsupported_field_order,
  no_nontrivial_output,
  io_error,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_parameter: return "invalid-parameter";
    case ErrorKind::axiom_violation: return "axiom-violation";
    case ErrorKind::unsupported_structure: return "unsupported-structure";
    case ErrorKind::not_injective: return "not-injective";
    case ErrorKind::not_homomorphic: return "not-homomorphic";
    case ErrorKind::ring_mismatch: return "ring-mismatch";
    case ErrorKind::not_a_field: return "not-a-field";
    case ErrorKind::incomplete_set: return "incomplete-set";
    case ErrorKind::syntax_error: return "syntax-error";
    case ErrorKind::unsupported_field_order: return "unsupported-field-order";
    case ErrorKind::no_nontrivial_output: return "no-nontrivial-output";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

/// Base exception for every failure raised by the library. The kind is the
/// machine-readable part; what() carries a human-readable explanation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A ring axiom failed on concrete elements. Triples that only need two
/// elements repeat the last one.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<std::size_t, 3> witness)
      : Error(ErrorKind::axiom_violation, describe(axiom, witness)),
        axiom_(std::move(axiom)),
        witness_(witness) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::array<std::size_t, 3>& w) {
    return axiom + " fails at (" + std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
           std::to_string(w[2]) + ")";
  }

  std::string axiom_;
  std::array<std::size_t, 3> witness_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::syntax_error, "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polyring
