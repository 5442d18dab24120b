#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pairguess {

// Base of every exception thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Amplitudes whose squared magnitudes do not sum to 1.
struct NormalizationError : Error {
  using Error::Error;
};

// Scalar argument outside its valid range (dimension, noise, probability,
// confidence level, ...).
struct DomainError : Error {
  using Error::Error;
};

// Strategy and game disagree on the number of values.
struct DimensionMismatch : Error {
  using Error::Error;
};

// An exhaustive search was asked to enumerate more cases than the guard
// allows.
struct ResourceLimit : Error {
  using Error::Error;
};

// A round record is malformed or inconsistent with the game. Carries the
// 1-based position of the offending record.
struct InvalidRecord : Error {
  InvalidRecord(std::size_t record_number, const std::string& detail)
      : Error("record " + std::to_string(record_number) + ": " + detail),
        record_number(record_number) {}

  std::size_t record_number;
};

// Too few rounds to compute the requested statistic.
struct InsufficientData : Error {
  using Error::Error;
};

}  // namespace pairguess
