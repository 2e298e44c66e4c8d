#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace homog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A resource cap (word count, rule count, state count) was hit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Rewriting did not reach an irreducible word within the fuel budget.
class NonTermination : public Error {
 public:
  NonTermination(const std::string& message, std::vector<std::string> trace_tail)
      : Error(message), trace_tail_(std::move(trace_tail)) {}

  const std::vector<std::string>& trace_tail() const noexcept { return trace_tail_; }

 private:
  std::vector<std::string> trace_tail_;
};

}  // namespace homog
