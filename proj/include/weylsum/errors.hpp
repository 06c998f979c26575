#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace weylsum {

/* Base of every failure the engine surfaces to callers.  kind() is a stable
   machine-readable tag; what() carries the human-readable payload. */
class EngineError : public std::runtime_error {
public:
  EngineError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/* Construction-time rejection: unsupported family/rank, bad index sets,
   subsystems that fail closure or the complement-permutation check. */
class ValidationError : public EngineError {
public:
  explicit ValidationError(const std::string& message)
      : EngineError("Validation", message) {}
};

/* A class handed to the summation engine is not fixed by some Weyl
   reflection of H (or of G, where G-invariance is required). */
class NotInvariantError : public EngineError {
public:
  NotInvariantError(const std::string& message, std::string reflection)
      : EngineError("NotInvariant", message),
        reflection_(std::move(reflection)) {}

  // One-line rendering of the violating reflection.
  const std::string& reflection() const { return reflection_; }

private:
  std::string reflection_;
};

/* A rational-function sum failed to reduce to a polynomial; surviving_
   holds the rendered denominator factors that did not divide out. */
class NotPolynomialError : public EngineError {
public:
  NotPolynomialError(const std::string& message, std::string surviving)
      : EngineError("NotPolynomial", message),
        surviving_(std::move(surviving)) {}

  const std::string& surviving_factors() const { return surviving_; }

private:
  std::string surviving_;
};

class DegreeMismatchError : public EngineError {
public:
  explicit DegreeMismatchError(const std::string& message)
      : EngineError("DegreeMismatch", message) {}
};

/* Point evaluation hit a vanishing denominator factor. */
class DenominatorVanishesError : public EngineError {
public:
  DenominatorVanishesError(const std::string& message, std::string form)
      : EngineError("DenominatorVanishes", message), form_(std::move(form)) {}

  const std::string& form() const { return form_; }

private:
  std::string form_;
};

/* Expression text rejected; position is the 1-based column. */
class SyntaxError : public EngineError {
public:
  SyntaxError(const std::string& message, int position)
      : EngineError("SyntaxError", message), position_(position) {}

  int position() const { return position_; }

private:
  int position_;
};

}  // namespace weylsum
