#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Every library failure derives from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownType : public Error {
 public:
  explicit UnknownType(const std::string& label)
      : Error("unknown Coxeter type '" + label + "'") {}
};

class MalformedCartan : public Error {
 public:
  using Error::Error;
};

class NonFiniteType : public Error {
 public:
  using Error::Error;
};

class SystemMismatch : public Error {
 public:
  SystemMismatch() : Error("elements belong to different Coxeter systems") {}
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Raised when a simply laced system contradicts the involution criterion.
/// Nothing in a correct build should ever throw this.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace schubert
