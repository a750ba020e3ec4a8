#pragma once

#include <stdexcept>
#include <string>

namespace adspace {

/// An algorithm received ads outside the size class it handles, or an
/// instance whose variant it does not support.
class ClassViolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search or enumeration would exceed its work budget. The thrower never
/// hands back a partial answer dressed up as a complete one.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter regime whose intermediate constants cannot be materialized
/// (e.g. a slot count that makes 2^(2^K) astronomically wide).
class OverflowGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An ad id outside the instance's [0, n) range.
class UnknownAdError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An invariant the algorithms guarantee by construction failed anyway.
/// Reaching this is a bug in this library, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input. Positions are 1-based; column points at the
/// offending token's first character.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line(line),
        column(column) {}

  int line;
  int column;
};

/// Structurally well-formed input that violates an instance constraint.
/// `ad_id` is -1 for instance-level violations.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(int ad_id, const std::string& constraint,
                  const std::string& message)
      : std::runtime_error(message), ad_id(ad_id), constraint(constraint) {}

  int ad_id;
  std::string constraint;
};

}  // namespace adspace
