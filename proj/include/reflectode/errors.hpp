#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflectode {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the admissible set (|t| > T, alpha outside (0, pi/4), ...).
class domain_error : public error {
 public:
  using error::error;
};

// Kernel does not exist: |sin(alpha)| (periodic) or |cos(alpha)| (antiperiodic)
// below the resonance guard, or F(cos mt) = F(sin mt) for the functional problem.
class resonance_error : public error {
 public:
  using error::error;
};

// Adaptive quadrature exhausted max_depth above tolerance.
class quadrature_error : public error {
 public:
  using error::error;
};

// Expression text rejected; position() is the byte offset of the offending token.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Expression evaluation left its domain (log of non-positive, division by zero, ...).
class eval_error : public error {
 public:
  using error::error;
};

// Problem-file JSON failed schema validation.
class schema_error : public error {
 public:
  using error::error;
};

// Manufactured solution fails its boundary condition.
class bc_violation_error : public error {
 public:
  using error::error;
};

// Midpoint comparison cannot order the two values (an input coincides with the peak).
class inconclusive_error : public error {
 public:
  using error::error;
};

// Orientation F(cos mt) > F(sin mt) required by the positivity proposition fails.
class orientation_error : public error {
 public:
  using error::error;
};

// An analytic positivity certificate contradicted by the grid check.
class certification_error : public error {
 public:
  using error::error;
};

// Threshold search could not bracket a sign change.
class bracket_error : public error {
 public:
  using error::error;
};

}  // namespace reflectode
