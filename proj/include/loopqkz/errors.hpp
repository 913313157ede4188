#pragma once

#include <stdexcept>
#include <string>

namespace loopqkz {

// Base of every error raised by the library. The CLI maps the subclasses
// onto distinct exit codes.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_argument : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

// A denominator of an operator or tile weight vanishes at the requested point.
class singular_parameter : public error {
 public:
  using error::error;
};

// The Weyl denominator of a symplectic character vanishes; the confluent
// evaluator has to be used instead.
class confluent_point : public error {
 public:
  using error::error;
};

// Eigenvalue-1 eigenspace of the transfer matrix is not one-dimensional.
class non_generic_point : public error {
 public:
  using error::error;
};

// Eigenvectors at two values of w disagree: the tile convention is broken.
class convention_error : public error {
 public:
  using error::error;
};

class degree_bound_violation : public error {
 public:
  using error::error;
};

class consistency_failure : public error {
 public:
  using error::error;
};

class internal_error : public error {
 public:
  using error::error;
};

}  // namespace loopqkz
