#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcmwb {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings (field, variables or order).
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured iteration or truncation cap was hit before a certified answer.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_cap, std::size_t limit)
      : Error(what_cap + " cap exceeded (limit " + std::to_string(limit) + ")"),
        cap_(std::move(what_cap)),
        limit_(limit) {}

  const std::string& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

/// Input violates a precondition of an operation (bad parameters, wrong arity...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A list of elements is not a (sub)system of parameters of the local ring.
class InvalidParameterSystem : public Error {
 public:
  using Error::Error;
};

/// A theorem-backed expectation failed (engine bug or uncertified horizon).
class Contradiction : public Error {
 public:
  using Error::Error;
};

}  // namespace gcmwb
