#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rubbling {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (edge lists, family specs, distributions, move lines).
// The message carries a line or token position where one makes sense.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid value: family parameter out of range, loop or duplicate
// edge, disconnected graph, negative pebble count, move not matching the graph.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold (cyclic multiset
// passed to the orderer, rolling move conditions violated, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Instance is beyond the documented size guard of an exhaustive procedure.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// 64-bit pebble arithmetic would wrap.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// The iterative solver ran past its distribution-size cap without settling on
// an answer.  Carries the largest level searched and, for the rubbling number,
// the failing witness found at that level.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::int64_t cap)
      : Error(what), cap_(cap) {}
  CapExceededError(const std::string& what, std::int64_t cap, int witness_target,
                   std::vector<std::int64_t> witness_distribution)
      : Error(what),
        cap_(cap),
        witness_target_(witness_target),
        witness_distribution_(std::move(witness_distribution)) {}

  std::int64_t cap() const { return cap_; }
  std::optional<int> witness_target() const { return witness_target_; }
  const std::optional<std::vector<std::int64_t>>& witness_distribution() const {
    return witness_distribution_;
  }

 private:
  std::int64_t cap_;
  std::optional<int> witness_target_;
  std::optional<std::vector<std::int64_t>> witness_distribution_;
};

}  // namespace rubbling
