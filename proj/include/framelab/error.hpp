#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace framelab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (mixed rings, zero divisor, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A group element moved part of a truncated complex outside the norm bound.
class TruncationEscape : public Error {
  public:
    TruncationEscape(const std::string &what, std::size_t vertex)
        : Error(what), vertex_(vertex) {}
    std::size_t vertex() const { return vertex_; }

  private:
    std::size_t vertex_;
};

/// The desk-scale guard refused a computation.
class SizeGuardError : public Error {
  public:
    SizeGuardError(const std::string &what, std::size_t size)
        : Error(what), size_(size) {}
    std::size_t size() const { return size_; }

  private:
    std::size_t size_;
};

} // namespace framelab
