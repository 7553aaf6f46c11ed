#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stereoknn {

/// Base type for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: non-finite values, empty vectors, dimension mismatches.
class InvalidInputError : public Error {
  public:
    using Error::Error;
};

/// Quantum-state preconditions violated (unnormalized qubit, Bloch vector
/// outside the unit ball).
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// A direction was required but the vector has none (zero norm).
class DegenerateDirectionError : public Error {
  public:
    using Error::Error;
};

/// A cluster admits no centroid under the requested update rule.
class DegenerateClusterError : public Error {
  public:
    using Error::Error;
};

/// Two centroids matched the same alphabet symbol during demapping.
class AmbiguousDemapError : public Error {
  public:
    using Error::Error;
};

/// Noise power is zero; the SNR is unbounded.
class InfiniteSnrError : public Error {
  public:
    using Error::Error;
};

/// File contents did not match the expected schema.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Filesystem-level failure (unreadable or unwritable path).
class IoError : public Error {
  public:
    using Error::Error;
};

}  // namespace stereoknn
