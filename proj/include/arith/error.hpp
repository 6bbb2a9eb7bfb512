#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace arith {

enum class ErrorKind {
  NotSquare,
  NotSymmetric,
  TooSmall,
  IndexOutOfRange,
  NotDivisible,
  GcdNotOne,
  LengthMismatch,
  Disconnected,
  InvalidStructure,
  TooFewVertices,
  DegenerateRep,
  TooLarge,
  DomainError,
  Parse,
  Input,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. `vertex()` carries the 0-based vertex index for
/// errors that are attached to a single vertex (e.g. NotDivisible).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> vertex = std::nullopt)
      : std::runtime_error(what), kind_(kind), vertex_(vertex) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> vertex() const noexcept { return vertex_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> vertex_;
};

}  // namespace arith
