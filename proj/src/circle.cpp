// SPDX-License-Identifier: Apache-2.0

#include "reeb/circle.hpp"

#include <algorithm>
#include <stdexcept>

#include "reeb/pl.hpp"

namespace reeb {

namespace {
constexpr double kPeriodSnapTol = 1e-9;
constexpr double kNodeGap = 1e-12;
}  // namespace

PLHomeo::PLHomeo(std::vector<double> us, std::vector<double> vs)
    : us_(std::move(us)), vs_(std::move(vs)) {
  if (us_.size() != vs_.size() || us_.size() < 2)
    throw std::invalid_argument("PLHomeo: need >= 2 (u,v) nodes");
  for (std::size_t i = 0; i + 1 < us_.size(); ++i) {
    if (!(us_[i + 1] - us_[i] >= kNodeGap) || !(vs_[i + 1] - vs_[i] >= kNodeGap))
      throw std::invalid_argument(
          "PLHomeo: nodes must be strictly increasing in both coordinates");
  }
  if (std::fabs(us_.back() - us_.front() - 1.0) > kPeriodSnapTol ||
      std::fabs(vs_.back() - vs_.front() - 1.0) > kPeriodSnapTol)
    throw std::invalid_argument("PLHomeo: nodes must span exactly one period");
  us_.back() = us_.front() + 1.0;  // snap; periodicity becomes exact
  vs_.back() = vs_.front() + 1.0;
}

PLHomeo PLHomeo::identity() { return PLHomeo({0.0, 1.0}, {0.0, 1.0}); }

PLHomeo PLHomeo::rotation(double c) { return PLHomeo({0.0, 1.0}, {c, c + 1.0}); }

double PLHomeo::eval_periodic(const std::vector<double>& xs,
                              const std::vector<double>& ys, double x) {
  // Reduce into the base window [x0, x0+1). For |k| >= 1 the subtraction
  // x - k is exact (Sterbenz), so the lift relation carries no rounding.
  double k = std::floor(x - xs.front());
  double s = x - k;
  if (s < xs.front()) {
    s += 1.0;
    k -= 1.0;
  } else if (s >= xs.back()) {
    s -= 1.0;
    k += 1.0;
  }
  return interp_segment(xs, ys, segment_index(xs, s), s) + k;
}

double PLHomeo::lift(double u) const { return eval_periodic(us_, vs_, u); }

double PLHomeo::inv_lift(double v) const { return eval_periodic(vs_, us_, v); }

PLHomeo PLHomeo::inverse() const { return PLHomeo(vs_, us_); }

bool PLHomeo::is_rotation() const {
  const double c = vs_.front() - us_.front();
  for (std::size_t i = 0; i < us_.size(); ++i)
    if (std::fabs(vs_[i] - us_[i] - c) > 1e-15) return false;
  return true;
}

CircleAction::CircleAction(PLHomeo conjugator)
    : g_(std::move(conjugator)), ginv_(g_.inverse()) {}

CirclePoint CircleAction::act(double t, CirclePoint x) const {
  const double tau = wrap_unit(t);
  if (tau == 0.0) return x;  // integer times are the identity, exactly
  return CirclePoint(g_.lift(ginv_.lift(x.value()) + tau));
}

double CircleAction::act_lift(double u, double t) const {
  return g_.lift(ginv_.lift(u) + t);
}

double lift_displacement_osc(const CircleAction& a, double t) {
  const double tau = wrap_unit(t);
  if (tau == 0.0) return 0.0;
  const PLHomeo& g = a.conjugator();
  // Displacement d(u) = g~(g~^{-1}(u) + tau) - u is PL and 1-periodic; its
  // breakpoints are the v-nodes of g and the points g~(u_k - tau).
  std::vector<double> candidates;
  candidates.reserve(2 * g.us().size());
  for (double v : g.vs()) candidates.push_back(v);
  for (double u : g.us()) candidates.push_back(g.lift(u - tau));
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (double u : candidates) {
    const double d = a.act_lift(u, tau) - u;
    if (first) {
      lo = hi = d;
      first = false;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  return hi - lo;
}

bool commutes_with_rotation(const CircleAction& a, CirclePoint c, double tol,
                            int samples) {
  if (!(tol > 0.0)) throw std::invalid_argument("commutes_with_rotation: tol > 0");
  const double cc = c.value();
  if (cc == 0.0) return true;  // R_0 = id
  const PLHomeo& g = a.conjugator();
  std::vector<double> ts, xs;
  ts.reserve(samples + 3);
  xs.reserve(samples + g.us().size());
  for (int j = 0; j < samples; ++j) ts.push_back((j + 0.5) / samples);
  ts.push_back(0.5);
  ts.push_back(0.25);
  ts.push_back(0.125);
  for (int j = 0; j < samples; ++j) xs.push_back(double(j) / samples);
  for (double u : g.vs()) xs.push_back(wrap_unit(u));
  for (double t : ts)
    for (double x : xs) {
      const CirclePoint lhs = a.act(t, CirclePoint(x + cc));
      const CirclePoint rhs = a.act(t, CirclePoint(x)) + cc;
      if (dist(lhs, rhs) > tol) return false;
    }
  return true;
}

PLHomeo random_pl_homeo(std::mt19937_64& rng, int interior_nodes,
                        double distort) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = std::max(1, interior_nodes);
  std::vector<double> us, vs;
  us.push_back(0.0);
  for (int i = 0; i < n; ++i) us.push_back(unit(rng));
  std::sort(us.begin() + 1, us.end());
  us.push_back(1.0);
  const double v0 = unit(rng);
  vs.push_back(v0);
  for (int i = 0; i < n; ++i) vs.push_back(v0 + unit(rng));
  std::sort(vs.begin() + 1, vs.end());
  vs.push_back(v0 + 1.0);
  // enforce node gaps, then push one node off the diagonal to rule out
  // accidental rotations
  for (std::size_t i = 1; i < us.size(); ++i) {
    us[i] = std::max(us[i], us[i - 1] + 1e-3);
    vs[i] = std::max(vs[i], vs[i - 1] + 1e-3);
  }
  if (us.back() > 1.0 || vs.back() > v0 + 1.0) {
    // rescale interiors back into the period
    for (std::size_t i = 1; i + 1 < us.size(); ++i)
      us[i] = us[i] / us.back();
    for (std::size_t i = 1; i + 1 < vs.size(); ++i)
      vs[i] = v0 + (vs[i] - v0) / (vs.back() - v0);
    us.back() = 1.0;
    vs.back() = v0 + 1.0;
  }
  if (distort > 0.0) {
    // Push the middle node off the rotation diagonal v = u + v0, keeping a
    // quarter-gap margin to its neighbours so monotonicity survives.
    const std::size_t mid = us.size() / 2;
    const double lo = vs[mid - 1], hi = vs[mid + 1];
    const double margin = 0.25 * (hi - lo);
    const double diag = v0 + us[mid];
    double target = diag + ((diag <= (lo + hi) / 2) ? distort : -distort);
    target = std::clamp(target, lo + margin, hi - margin);
    if (target == diag)
      target = (std::fabs(lo + margin - diag) > std::fabs(hi - margin - diag))
                   ? lo + margin
                   : hi - margin;
    vs[mid] = target;
  }
  return PLHomeo(us, vs);
}

}  // namespace reeb
