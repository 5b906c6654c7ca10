#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace redlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vectors or ideals living in rings of different dimension were combined.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition (m-primary, contracted, ES gate, ...) fails.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// A theorem gate (generator-count bound, fiber-cone degree bound) refused a
// search.  Carries the gate name for reporting.
class GateRefusedError : public HypothesisError {
 public:
  GateRefusedError(std::string gate, const std::string& what)
      : HypothesisError(gate + ": " + what), gate_(std::move(gate)) {}
  const std::string& gate() const { return gate_; }

 private:
  std::string gate_;
};

// Truncation order too small or other run configuration that would make a
// verdict unsound.  Never silently corrected.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A summand of a reduction equation is malformed or not contained in the
// target.  With sampled elements this points at a sampler bug.
class InvalidSummandError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace redlab
