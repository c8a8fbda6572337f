#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgap {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-prime p, odd weight, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A coefficient was requested at or beyond the justified reach of a series.
class ReachError : public Error {
 public:
  using Error::Error;
};

/// Malformed form expression, survey config or Gram file.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qgap
