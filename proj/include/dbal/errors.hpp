// errors.hpp - exception types shared by the dbal library.
#pragma once

#include <stdexcept>
#include <string>

namespace dbal {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameters fall outside the range where a construction or formula is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class InvalidVertex : public Error {
 public:
  using Error::Error;
};

class IdenticalVertices : public Error {
 public:
  IdenticalVertices() : Error("partition requires two distinct vertices") {}
};

class EllOutOfRange : public Error {
 public:
  using Error::Error;
};

class EllUnsupported : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dbal
