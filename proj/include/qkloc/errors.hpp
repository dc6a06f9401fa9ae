#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qkloc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Values built in incompatible algebra contexts were combined.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested root order M cannot host an m-th root or a^{-1} power.
class RootOrderExceeded : public Error {
 public:
  using Error::Error;
};

class PoleHit : public Error {
 public:
  using Error::Error;
};

class NotAPole : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class OracleError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class PowerNotInteger : public Error {
 public:
  using Error::Error;
};

// An expression lowered into the wrong value kind (q where only torus
// characters are allowed, P mixed with q, ...).
class TypeError : public Error {
 public:
  using Error::Error;
};

}  // namespace qkloc
