#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simerr {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Estimand declaration does not resolve against the data (bad selector,
// q outside (0,1), dimension mismatch, ...).
class SpecError : public Error {
  public:
    using Error::Error;
};

// Malformed or insufficient input data.
class DataError : public Error {
  public:
    using Error::Error;
};

// File ingestion problems; carries a 1-based line number when known.
class IngestError : public DataError {
  public:
    IngestError(const std::string& what, std::size_t line = 0)
        : DataError(line ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Kernel density estimate collapsed; Lambda is not invertible.
class DegenerateDensityError : public Error {
  public:
    using Error::Error;
};

// Batch means cannot be configured (fewer than two batches, bad size).
class BatchConfigError : public Error {
  public:
    using Error::Error;
};

// Cholesky pivot failed; the matrix is not positive definite.
class FactorizationError : public Error {
  public:
    FactorizationError(const std::string& what, std::size_t pivot)
        : Error(what + " (pivot " + std::to_string(pivot) + ")"), pivot_(pivot) {}
    std::size_t pivot() const { return pivot_; }

  private:
    std::size_t pivot_;
};

// Nonfinite values or arguments outside the mathematical domain.
class NumericError : public Error {
  public:
    using Error::Error;
};

}  // namespace simerr
