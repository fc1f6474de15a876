#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hermitia {

/// Malformed .qgg text or family-spec text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its stated domain (bad parameters,
/// preconditions on graph structure, edge-cut restrictions, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural check was given input outside its hypotheses.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configurable search or enumeration cap was exceeded.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hermitia
