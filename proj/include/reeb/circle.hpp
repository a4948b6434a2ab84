// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace reeb {

//! Canonical representative in [0,1) of a real number mod 1.
inline double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r -= 1.0;  // floor can round up just below an integer
  return r;
}

//! Distance on the circle R/Z between canonical representatives.
inline double circle_dist(double a, double b) {
  double d = std::fabs(wrap_unit(a) - wrap_unit(b));
  return std::min(d, 1.0 - d);
}

//! Point on the circle R/Z, unit = one full turn. Always canonical.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double x) : v_(wrap_unit(x)) {}

  double value() const { return v_; }

  CirclePoint operator+(double t) const { return CirclePoint(v_ + t); }
  friend double dist(CirclePoint a, CirclePoint b) {
    return circle_dist(a.v_, b.v_);
  }

 private:
  double v_ = 0.0;
};

//! Orientation-preserving circle homeomorphism, stored as the lift
//! g~ : R -> R with g~(u+1) = g~(u)+1, itself stored as strictly
//! increasing PL nodes (u_k, v_k) over one period: u spans [u0, u0+1]
//! and v spans [v0, v0+1], both snapped exactly at construction.
//!
//! Period reduction u -> u - floor(u - u0) is exact in doubles, so the
//! relation g~(u+n) = g~(u)+n holds bit-for-bit for integer n whenever
//! the sum u + n is itself exact (e.g. dyadic u); a generic u pays one
//! rounding of the input, amplified by at most the local slope.
class PLHomeo {
 public:
  //! Nodes must be strictly increasing in both coordinates and span one
  //! period in each (|u_last-u_first-1| and |v_last-v_first-1| <= 1e-9;
  //! the endpoints are then snapped to make periodicity exact).
  PLHomeo(std::vector<double> us, std::vector<double> vs);

  static PLHomeo identity();
  //! Lift u -> u + c, i.e. the rotation by c.
  static PLHomeo rotation(double c);

  //! Lift evaluation at any real u.
  double lift(double u) const;
  //! Inverse lift evaluation at any real v.
  double inv_lift(double v) const;
  //! The inverse homeomorphism (nodes swapped).
  PLHomeo inverse() const;

  //! Circle map: g(x) mod 1.
  CirclePoint map(CirclePoint x) const { return CirclePoint(lift(x.value())); }

  bool is_rotation() const;

  const std::vector<double>& us() const { return us_; }
  const std::vector<double>& vs() const { return vs_; }

 private:
  std::vector<double> us_, vs_;

  static double eval_periodic(const std::vector<double>& xs,
                              const std::vector<double>& ys, double x);
};

//! Free S^1-action on the circle, psi^t = g o R_t o g^{-1}. Storing the
//! conjugator g keeps the group law and the period-1 identity exact: t is
//! reduced mod 1 before evaluation, and integer times act as the identity
//! bit-for-bit.
class CircleAction {
 public:
  explicit CircleAction(PLHomeo conjugator);

  static CircleAction rotation() { return CircleAction(PLHomeo::identity()); }

  CirclePoint act(double t, CirclePoint x) const;

  //! Lift of psi^t evaluated at a real representative: g~(g~^{-1}(u) + t).
  double act_lift(double u, double t) const;

  const PLHomeo& conjugator() const { return g_; }
  bool is_rotation() const { return g_.is_rotation(); }

 private:
  PLHomeo g_;
  PLHomeo ginv_;  // materialized once; evaluation stays O(log n)
};

//! psi^t(x) for plain values; convenience over CircleAction::act.
inline double act(const CircleAction& a, double t, double x) {
  return a.act(t, CirclePoint(x)).value();
}

//! Oscillation of the displacement of the lift of psi^t:
//! max_u(psi~^t(u)-u) - min_u(psi~^t(u)-u), evaluated exactly over the
//! breakpoints of the composed PL map. Strictly below 1 for any circle
//! homeomorphism; identically 0 for rotations and for integer t.
double lift_displacement_osc(const CircleAction& a, double t);

//! True iff d(psi^t(x+c), psi^t(x)+c) <= tol over a deterministic sweep of
//! (t,x) samples (grid plus dyadic times plus conjugator breakpoints).
bool commutes_with_rotation(const CircleAction& a, CirclePoint c, double tol,
                            int samples = 40);

//! Seeded random PL circle homeomorphism with `interior_nodes` breakpoints.
//! With distort > 0 the map is guaranteed non-affine (non-rotation).
PLHomeo random_pl_homeo(std::mt19937_64& rng, int interior_nodes,
                        double distort);

}  // namespace reeb
