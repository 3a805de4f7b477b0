#pragma once

#include <stdexcept>
#include <string>

namespace casselman {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MixedRootSystems : public Error {
 public:
  MixedRootSystems() : Error("elements belong to different Weyl groups") {}
};

class NotComparable : public Error {
 public:
  using Error::Error;
};

class NotSimplyLaced : public Error {
 public:
  using Error::Error;
};

// Limit along z^alpha -> infinity does not exist.
class NoLimit : public Error {
 public:
  using Error::Error;
};

// A modular sample point makes a required denominator vanish.
class BadSample : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace casselman
