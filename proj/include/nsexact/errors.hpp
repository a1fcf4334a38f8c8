// SPDX-License-Identifier: Apache-2.0

#ifndef NSEXACT_ERRORS_HPP_
#define NSEXACT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nsexact {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadratic constants violate one or both of the two compatibility equations.
class ConstraintViolation : public Error {
 public:
  ConstraintViolation(double res1, double res2);
  double res1() const { return res1_; }
  double res2() const { return res2_; }

 private:
  double res1_;
  double res2_;
};

/// Evaluation of a derivative at a point where the gradient blows up.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

/// F-function evaluation too close to a coordinate axis.
class AxisSingularity : public Error {
 public:
  using Error::Error;
};

/// Probe angles give a (near) singular Cramer system.
class DegenerateAngles : public Error {
 public:
  DegenerateAngles(double conditioning);
  double conditioning() const { return conditioning_; }

 private:
  double conditioning_;
};

/// A finite-difference stencil or integration path leaves the domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Family/domain pair outside the catalog.
class Inadmissible : public Error {
 public:
  using Error::Error;
};

/// Sampled field that is not separated (a component fails rank-1
/// separation) or a sample layout below the classifier's minimum.
class DegenerateSamples : public Error {
 public:
  using Error::Error;
};

/// Malformed input text; line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace nsexact

#endif  // NSEXACT_ERRORS_HPP_
