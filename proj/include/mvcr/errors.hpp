#pragma once

#include <stdexcept>
#include <string>

namespace mvcr {

// Base class for every error raised by the library. Each subclass names one
// failure mode so callers (and the CLI) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NonSimplyLaced : public Error {
 public:
  using Error::Error;
};

class NotFiniteType : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotProportional : public Error {
 public:
  using Error::Error;
};

class InvalidMove : public Error {
 public:
  using Error::Error;
};

// Raised when move transport around a cycle produces two different vertices
// for the same Weyl element. Never expected for valid input.
class InconsistentTransport : public Error {
 public:
  using Error::Error;
};

class OutsideHull : public Error {
 public:
  using Error::Error;
};

class InconsistentVertex : public Error {
 public:
  using Error::Error;
};

class NoWordStartingWith : public Error {
 public:
  using Error::Error;
};

class PathDeadEnd : public Error {
 public:
  using Error::Error;
};

// No N up to the search cap factors the polytope; says nothing about larger N.
class NotFound : public Error {
 public:
  NotFound(const std::string& what, long nmax) : Error(what), nmax_(nmax) {}
  long nmax() const { return nmax_; }

 private:
  long nmax_;
};

}  // namespace mvcr
