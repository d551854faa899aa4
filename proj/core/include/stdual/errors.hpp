#pragma once

#include <stdexcept>
#include <string>

namespace stdual {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (bad family, bad subset, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configured size bound (group order, Weyl size, conductor) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// Scenario data contradicts a structural guarantee (e.g. no Levi matches a
// fixed space).
class ScenarioInconsistency : public Error {
 public:
  using Error::Error;
};

// A computation needs data the scenario does not provide (e.g. a base
// character for a nonsplit central character).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace stdual
