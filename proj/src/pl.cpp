// SPDX-License-Identifier: Apache-2.0

#include "reeb/pl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace reeb {

PiecewiseLinear::PiecewiseLinear(std::vector<double> xs, std::vector<double> ys,
                                 Extend extend)
    : extend_(extend) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("PiecewiseLinear: need >= 2 (x,y) nodes");
  std::vector<std::size_t> order(xs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  xs_.reserve(xs.size());
  ys_.reserve(ys.size());
  for (std::size_t i : order) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
      throw std::invalid_argument("PiecewiseLinear: non-finite node");
    if (!xs_.empty() && xs[i] - xs_.back() < kMinGap) continue;  // dedupe
    xs_.push_back(xs[i]);
    ys_.push_back(ys[i]);
  }
  if (xs_.size() < 2)
    throw std::invalid_argument("PiecewiseLinear: nodes collapse to a point");
}

std::size_t segment_index(const std::vector<double>& xs, double x) {
  // first node > x, step back one; clamp to [0, n-2]
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  if (it == xs.begin()) return 0;
  std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  return std::min(i, xs.size() - 2);
}

double interp_segment(const std::vector<double>& xs,
                      const std::vector<double>& ys, std::size_t i, double x) {
  if (x == xs[i]) return ys[i];
  if (x == xs[i + 1]) return ys[i + 1];
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + t * (ys[i + 1] - ys[i]);
}

double PiecewiseLinear::operator()(double x) const {
  if (extend_ == Extend::Constant) {
    if (x <= xs_.front()) return ys_.front();
    if (x >= xs_.back()) return ys_.back();
  }
  return interp_segment(xs_, ys_, segment_index(xs_, x), x);
}

double PiecewiseLinear::inverse(double y) const {
  if (!strictly_increasing())
    throw std::logic_error("PiecewiseLinear::inverse on non-monotone data");
  return interp_segment(ys_, xs_, segment_index(ys_, y), y);
}

bool PiecewiseLinear::strictly_increasing() const {
  for (std::size_t i = 0; i + 1 < ys_.size(); ++i)
    if (!(ys_[i] < ys_[i + 1])) return false;
  return true;
}

}  // namespace reeb
