#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace lcord {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad orders, out-of-range endpoints, non-permutations,
/// composite sizes beyond the supported bounds.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The labeling definition only applies to connected graphs.
class AdmissionError : public Error {
 public:
  using Error::Error;
};

/// A construction precondition does not hold. When the failed condition is
/// an equation, `lhs` and `rhs` carry both evaluated sides.
class HypothesisViolation : public Error {
 public:
  HypothesisViolation(std::string condition, std::string message,
                      std::optional<std::int64_t> lhs = std::nullopt,
                      std::optional<std::int64_t> rhs = std::nullopt)
      : Error(std::move(message)),
        condition_(std::move(condition)),
        lhs_(lhs),
        rhs_(rhs) {}

  const std::string& condition() const noexcept { return condition_; }
  std::optional<std::int64_t> lhs() const noexcept { return lhs_; }
  std::optional<std::int64_t> rhs() const noexcept { return rhs_; }

 private:
  std::string condition_;
  std::optional<std::int64_t> lhs_;
  std::optional<std::int64_t> rhs_;
};

/// Tensor constructions need a connected product: both factors bipartite
/// is rejected with this error.
class ConnectivityViolation : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

}  // namespace lcord
