// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reeb {

//! Input outside the representable window of a profile or map.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

//! A glued-action build was rejected: some monotone block of the profile
//! has a non-integer endpoint value. `constraint` is the fractional part
//! the boundary action would have to commute with.
class GlueConstraintViolation : public std::invalid_argument {
 public:
  GlueConstraintViolation(std::string msg, double constraint,
                          std::vector<double> offending)
      : std::invalid_argument(std::move(msg)),
        constraint_(constraint),
        offending_(std::move(offending)) {}

  double constraint() const { return constraint_; }
  const std::vector<double>& offending_values() const { return offending_; }

 private:
  double constraint_;
  std::vector<double> offending_;
};

//! A product-extension build was rejected: the candidate half-line action
//! does not have the required time-one map. Carries the offending sample.
class TimeOneMismatch : public std::invalid_argument {
 public:
  TimeOneMismatch(std::string msg, double sample, double got, double want)
      : std::invalid_argument(std::move(msg)),
        sample_(sample),
        got_(got),
        want_(want) {}

  double sample() const { return sample_; }
  double got() const { return got_; }
  double want() const { return want_; }

 private:
  double sample_, got_, want_;
};

//! Level-set root search found no horizontally going point at the working
//! resolution. `min_residual` is the smallest |p(act(x,y,step)) - y| seen.
class HorizontalPointsNotFound : public std::runtime_error {
 public:
  HorizontalPointsNotFound(std::string msg, double min_residual)
      : std::runtime_error(std::move(msg)), min_residual_(min_residual) {}

  double min_residual() const { return min_residual_; }

 private:
  double min_residual_;
};

}  // namespace reeb
