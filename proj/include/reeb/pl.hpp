// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace reeb {

//! Continuous piecewise-linear function on the real line, given by a finite
//! node list. Outside the node window it extends with the edge segment's
//! slope (Extend::Linear) or as a constant (Extend::Constant).
//!
//! Node abscissae are kept sorted; nodes closer than `kMinGap` in x are
//! dropped to avoid degenerate segments.
class PiecewiseLinear {
 public:
  enum class Extend { Linear, Constant };

  static constexpr double kMinGap = 1e-12;

  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<double> xs, std::vector<double> ys,
                  Extend extend = Extend::Linear);

  double operator()(double x) const;

  //! Inverse evaluation; valid only when strictly_increasing().
  double inverse(double y) const;

  bool strictly_increasing() const;
  std::size_t size() const { return xs_.size(); }
  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ys() const { return ys_; }
  double x_front() const { return xs_.front(); }
  double x_back() const { return xs_.back(); }

 private:
  std::vector<double> xs_, ys_;
  Extend extend_ = Extend::Linear;
};

//! Linear interpolation on a sorted abscissa array. `i` is the segment
//! index with xs[i] <= x <= xs[i+1]; exact at nodes.
double interp_segment(const std::vector<double>& xs,
                      const std::vector<double>& ys, std::size_t i, double x);

//! Segment index for x in a sorted node array (clamped to valid range).
std::size_t segment_index(const std::vector<double>& xs, double x);

}  // namespace reeb
