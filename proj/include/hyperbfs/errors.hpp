#pragma once

#include <stdexcept>
#include <string>

namespace hyperbfs {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A universally quantified check was asked of a carrier that cannot be scanned.
class NotCheckableError : public Error {
 public:
  using Error::Error;
};

// A key is not a member of the key space it was looked up in.
class KeyError : public Error {
 public:
  using Error::Error;
};

// Contracted key spaces of an array product differ in set or ordering.
class ContractionError : public Error {
 public:
  using Error::Error;
};

// The sparse product was requested for a value set without an annihilator certificate.
class CertificationError : public Error {
 public:
  using Error::Error;
};

// Incidence data inconsistent with a hypergraph, or a malformed hypergraph.
class IncidenceError : public Error {
 public:
  using Error::Error;
};

// Cost guards on enumeration and harness bounds.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Malformed file or literal input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperbfs
