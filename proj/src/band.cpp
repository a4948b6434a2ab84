// SPDX-License-Identifier: Apache-2.0

#include "reeb/band.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "reeb/errors.hpp"

namespace reeb {

BandFlow::BandFlow(Profile p) : profile_(std::move(p)) {}

BandPoint BandFlow::flow(BandPoint pt, double t) const {
  pt.x += t;
  return pt;
}

BandPoint BandFlow::transition(BandPoint pt) const {
  if (pt.y == 0.0)
    throw RangeError(
        "boundary point (y = 0) has no image in the other chart");
  const double fv = profile_.f(pt.y);
  if (pt.chart == 0) return {1, pt.x - fv, pt.y};
  return {0, pt.x + fv, pt.y};
}

double BandFlow::transit_time(double y) const {
  // gamma0(y) lands in chart 1 at x = -f(y); the flow is unit-speed
  // translation, so it hits the chart-1 transversal after exactly that long
  return -transition(gamma0(y)).x;
}

BandFlow realize_flow(Profile p) { return BandFlow(std::move(p)); }

std::vector<OrbitSample> sample_orbit(const BandFlow& fl, BandPoint start,
                                      double t_max, int steps) {
  if (steps < 1) throw std::invalid_argument("need steps >= 1");
  std::vector<OrbitSample> out;
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    const double t = t_max * double(i) / double(steps);
    out.push_back({t, fl.flow(start, t)});
  }
  return out;
}

HalfLineAction::HalfLineAction(Model m, PiecewiseLinear c, bool is_model)
    : model_(m), c_(std::move(c)), is_model_(is_model) {}

HalfLineAction HalfLineAction::model(Model m) {
  return HalfLineAction(m, PiecewiseLinear({0.0, 1.0}, {0.0, 1.0}), true);
}

HalfLineAction HalfLineAction::conjugated(Model m, PiecewiseLinear c) {
  if (!c.strictly_increasing())
    throw std::invalid_argument(
        "half-line conjugator must be strictly increasing");
  return HalfLineAction(m, std::move(c), false);
}

HalfLineAction HalfLineAction::periodic(Model m, const PLHomeo& g, double w_lo,
                                        double w_hi) {
  if (!(w_hi - w_lo >= 2.0))
    throw std::invalid_argument("periodic conjugator window too small");
  std::vector<double> xs, ys;
  const double u0 = g.us().front();
  // copies of the one-period node list shifted by integers covering the window
  const long k_lo = long(std::floor(w_lo - u0));
  const long k_hi = long(std::ceil(w_hi - u0));
  for (long k = k_lo; k <= k_hi; ++k) {
    for (std::size_t i = 0; i + 1 < g.us().size(); ++i) {
      xs.push_back(g.us()[i] + double(k));
      ys.push_back(g.vs()[i] + double(k));
    }
  }
  xs.push_back(g.us().back() + double(k_hi));
  ys.push_back(g.vs().back() + double(k_hi));
  return HalfLineAction(m, PiecewiseLinear(std::move(xs), std::move(ys)),
                        false);
}

double HalfLineAction::act(double t, double x) const {
  if (x == 0.0) return 0.0;
  if (!(x > 0.0)) throw std::invalid_argument("half-line action needs x >= 0");
  const double s = (model_ == Model::kExpanding) ? t : -t;
  if (is_model_) return x * std::exp2(s);
  const double w = std::log2(x);
  return std::exp2(c_(c_.inverse(w) + s));
}

ProductFlow build_standard_extension(const HalfLineAction& psi0,
                                     const HalfLineAction& psi1) {
  // log-spaced sample grid through several binades on each axis
  for (int e = -8; e <= 8; ++e) {
    for (double m : {1.0, 1.25, 1.5, 1.75}) {
      const double x = m * std::exp2(e);
      const double gx = psi0.time_one(x);
      if (std::fabs(gx - 2.0 * x) > 1e-9 * std::max(1.0, 2.0 * x))
        throw TimeOneMismatch(
            "time-one of the x-axis action is not doubling at x = " +
                std::to_string(x),
            x, gx, 2.0 * x);
      const double gy = psi1.time_one(x);
      if (std::fabs(gy - 0.5 * x) > 1e-9 * std::max(1.0, 0.5 * x))
        throw TimeOneMismatch(
            "time-one of the y-axis action is not halving at y = " +
                std::to_string(x),
            x, gy, 0.5 * x);
    }
  }
  return ProductFlow(psi0, psi1);
}

}  // namespace reeb
