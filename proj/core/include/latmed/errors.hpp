#pragma once

#include <stdexcept>
#include <string>

namespace latmed {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Cover relation contains a directed cycle.
class CycleError : public Error {
 public:
  using Error::Error;
};

/// The poset is not a lattice, or the cover list is not transitively reduced.
class NotALattice : public Error {
 public:
  using Error::Error;
};

class EmptyInterval : public Error {
 public:
  using Error::Error;
};

class NotJoinPrime : public Error {
 public:
  using Error::Error;
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class ZeroForbidden : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotAProduct : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed lattice file.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace latmed
