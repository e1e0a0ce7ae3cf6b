#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace oramsey {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph spec; position is the 0-based offset of the offending
// character in the input text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Invalid graph construction (endpoint out of range, loop, bad family).
class GraphError : public Error {
 public:
  using Error::Error;
};

// Violation of the game protocol (duplicate pair, game over, no pending move).
class GameError : public Error {
 public:
  using Error::Error;
};

// A strategy misbehaved or cannot continue.
class StrategyError : public Error {
 public:
  using Error::Error;
};

// Transcript failed schema validation or replay.
class TranscriptError : public Error {
 public:
  using Error::Error;
};

// Exact search ran out of its node budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& message, int lower, int upper)
      : Error(message), lower_(lower), upper_(upper) {}

  // Bounds on the value proven before the budget ran out.
  int lower() const noexcept { return lower_; }
  int upper() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

}  // namespace oramsey
