#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chernob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or input file. `position` is a character offset
/// for polynomial text and a 1-based line number for input files.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different polynomial rings") {}
};

/// An explicit computation cap (pair degree, truncation degree) was reached.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input violates a mathematical precondition of a pipeline: non-isolated
/// special locus, non complete-intersection presentation, infinite colength.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagreed.
class RouteDisagreement : public Error {
 public:
  using Error::Error;
};

/// Two seeded runs of a randomized oracle disagreed; retry with new seeds.
class SeedDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace chernob
