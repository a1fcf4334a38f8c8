// SPDX-License-Identifier: Apache-2.0

#include "nsexact/errors.hpp"

#include <sstream>

namespace nsexact {

namespace {

std::string constraint_message(double res1, double res2) {
  std::ostringstream os;
  os.precision(6);
  os << "quadratic constants violate C1C3+C2C4-2C1C2=0, C1C4-C2C3+C1^2-C2^2=0"
     << " (residuals " << res1 << ", " << res2 << ")";
  return os.str();
}

std::string degenerate_message(double conditioning) {
  std::ostringstream os;
  os << "probe angles give a degenerate Cramer system (|D1| = " << conditioning << ")";
  return os.str();
}

}  // namespace

ConstraintViolation::ConstraintViolation(double res1, double res2)
    : Error(constraint_message(res1, res2)), res1_(res1), res2_(res2) {}

DegenerateAngles::DegenerateAngles(double conditioning)
    : Error(degenerate_message(conditioning)), conditioning_(conditioning) {}

ParseError::ParseError(int line, const std::string& what)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

}  // namespace nsexact
