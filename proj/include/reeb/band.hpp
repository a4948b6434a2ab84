// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "reeb/circle.hpp"
#include "reeb/pl.hpp"
#include "reeb/profile.hpp"

namespace reeb {

//! Point of the band in one of its two charts. `x` is the universal-cover
//! coordinate along the leaf; y = 0 is the boundary of the chart and has
//! no image in the other chart.
struct BandPoint {
  int chart = 0;  // 0 or 1
  double x = 0.0;
  double y = 0.0;
};

//! Horizontal flow on the two-chart band glued along their interiors by
//! the cocycle x -> x - f(y). Flowing is translation in x, so the time-one
//! map is the deck translation x -> x + 1 in both charts, and the transit
//! time between the x = 0 transversals is exactly f.
class BandFlow {
 public:
  explicit BandFlow(Profile p);

  const Profile& profile() const { return profile_; }

  //! x -> x + t, same chart, same y.
  BandPoint flow(BandPoint pt, double t) const;

  //! Chart change. 0 -> 1 subtracts f(y) from x; 1 -> 0 adds it back, so
  //! the round trip is the identity up to one rounding of the larger
  //! magnitude, and exact at x = 0 where the transversals live. Throws
  //! RangeError for boundary points (y = 0 has no image in the other
  //! chart) and for y outside the profile window.
  BandPoint transition(BandPoint pt) const;

  //! Transversal through x = 0 in chart i.
  static BandPoint gamma0(double y) { return {0, 0.0, y}; }
  static BandPoint gamma1(double y) { return {1, 0.0, y}; }

  //! Time from gamma0(y) to gamma1(y) along the flow, measured by pushing
  //! gamma0(y) through the chart change and reading off when it crosses
  //! x = 0 there; equals f(y) by construction of the gluing.
  double transit_time(double y) const;

 private:
  Profile profile_;
};

//! The band flow realizing a given transit-time profile.
BandFlow realize_flow(Profile p);

//! One row of a sampled orbit.
struct OrbitSample {
  double t = 0.0;
  BandPoint pt;
};

//! Samples the orbit of `start` at `steps`+1 equally spaced times in
//! [0, t_max].
std::vector<OrbitSample> sample_orbit(const BandFlow& fl, BandPoint start,
                                      double t_max, int steps);

//! Flow on [0, inf) fixing 0 and free on (0, inf), stored as a conjugacy
//! to an exponential model: expanding x -> 2^t x or contracting
//! x -> 2^(-t) x. The conjugator acts in the coordinate w = log2(x), so
//! psi^t(x) = exp2(C(C^(-1)(log2 x) + s t)) with s = +/-1. The plain
//! models skip the conjugator and keep integer-time images bit-exact.
class HalfLineAction {
 public:
  enum class Model { kExpanding, kContracting };

  static HalfLineAction model(Model m);

  //! Conjugated action from an arbitrary strictly increasing PL map in
  //! the w coordinate (linear extension outside its window). The time-one
  //! map is x -> 2x (or x/2) only when C commutes with w -> w + 1.
  static HalfLineAction conjugated(Model m, PiecewiseLinear c);

  //! Conjugated action whose conjugator is the lift of a circle
  //! homeomorphism, materialized over [w_lo, w_hi]. Such a C commutes
  //! with w -> w + 1 on the window, so the time-one map is the model's.
  static HalfLineAction periodic(Model m, const PLHomeo& g, double w_lo = -64,
                                 double w_hi = 64);

  double act(double t, double x) const;
  double time_one(double x) const { return act(1.0, x); }

  Model model_kind() const { return model_; }
  bool is_model() const { return is_model_; }
  const PiecewiseLinear& conjugator() const { return c_; }

 private:
  HalfLineAction(Model m, PiecewiseLinear c, bool is_model);

  Model model_;
  PiecewiseLinear c_;
  bool is_model_;
};

//! Product flow phi^t(x, y) = (psi0^t(x), psi1^t(y)) on the closed first
//! quadrant minus the origin; its time-one map is (2x, y/2).
class ProductFlow {
 public:
  ProductFlow(HalfLineAction psi0, HalfLineAction psi1)
      : psi0_(std::move(psi0)), psi1_(std::move(psi1)) {}

  std::array<double, 2> act(double t, double x, double y) const {
    return {psi0_.act(t, x), psi1_.act(t, y)};
  }
  std::array<double, 2> time_one(double x, double y) const {
    return act(1.0, x, y);
  }

  //! Restriction to the boundary half-line y = 0 (the stored psi0).
  const HalfLineAction& boundary_x() const { return psi0_; }
  //! Restriction to the boundary half-line x = 0 (the stored psi1).
  const HalfLineAction& boundary_y() const { return psi1_; }

 private:
  HalfLineAction psi0_, psi1_;
};

//! Validates that psi0 has time-one x -> 2x and psi1 has time-one
//! y -> y/2 (within 1e-9 over a log-spaced sample grid), then assembles
//! the product flow extending both. Throws TimeOneMismatch with the
//! offending sample otherwise.
ProductFlow build_standard_extension(const HalfLineAction& psi0,
                                     const HalfLineAction& psi1);

}  // namespace reeb
