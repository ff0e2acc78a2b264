#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathcirc {

// Root of every error thrown by the library. `kind()` names the failure class
// so front ends can report it without RTTI games.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Bus widths of two circuits (or of a circuit and its input) disagree.
class WidthError : public Error {
 public:
  explicit WidthError(const std::string& what) : Error("WidthError", what) {}
};

// A construction or check would exceed its configured size budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error("BudgetError", what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string location = {})
      : Error("ParseError", location.empty() ? what : location + ": " + what),
        location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// A circuit violates a structural invariant (topological order, arity, linear wire use).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error("ValidationError", what) {}
};

class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what) : Error("LookupError", what) {}
};

class LengthError : public Error {
 public:
  explicit LengthError(const std::string& what) : Error("LengthError", what) {}
};

// A graph does not fit the vertex/edge capacity of a universal circuit.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error("CapacityError", what) {}
};

}  // namespace pathcirc
