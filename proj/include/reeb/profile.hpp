// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "reeb/pl.hpp"

namespace reeb {

//! Result of the sigma (tail oscillation) computation.
//!
//! For the built-in families sigma has an exact closed form and `value`
//! is the answer with lo == hi == value. For custom node data sigma is
//! estimated from the deepest nodes: if the window maxima have converged,
//! `value` is the common limit; if they grow without decay, `is_infinite`
//! is set; otherwise only a bracket [lo, hi] is known and `is_estimate`
//! is set with `value` the bracket midpoint.
struct SigmaValue {
  double value = 0.0;
  bool is_infinite = false;
  bool is_estimate = false;
  double lo = 0.0;
  double hi = 0.0;
};

//! Strictly increasing PL homeomorphism of [0, inf) with h(0) = 0, used to
//! reparametrize a profile's depth coordinate. Defined beyond its last node
//! by linear extension.
class WitnessH {
 public:
  //! Nodes are (y, h(y)) pairs; the first must be (0, 0) and both
  //! coordinates must be strictly increasing.
  explicit WitnessH(std::vector<std::array<double, 2>> nodes);

  static WitnessH identity();

  double operator()(double y) const { return pl_(y); }
  double inverse(double v) const { return pl_.inverse(v); }
  const PiecewiseLinear& pl() const { return pl_; }

 private:
  PiecewiseLinear pl_;
};

//! Continuous PL function on [0, inf), no monotonicity required; constant
//! beyond its node window. Used as the additive part of a profile
//! reparametrization.
class WitnessK {
 public:
  explicit WitnessK(std::vector<std::array<double, 2>> nodes);

  static WitnessK zero();

  double operator()(double y) const { return pl_(y); }
  const PiecewiseLinear& pl() const { return pl_; }

 private:
  PiecewiseLinear pl_;
};

//! Transit-time profile f on a window [y_min, 1], piecewise linear in the
//! depth coordinate u = log2(1/y). The built-in families keep all node
//! coordinates exactly representable:
//!
//!   monotone       f = f0 + u                       (nodes at u = 0, 2*depth)
//!   example1       f(y_n) = f0 + n,  f(y_n') = f0 + n - 1
//!   example2(beta) f(y_n) = f0 + n*beta, f(y_n') = f0 + n*beta - 1
//!
//! with the default grid y_n = 2^(1-2n), y_n' = 2^(-2n), so u is integral
//! at every node. The custom family takes explicit (y, f) nodes and must
//! anchor one at y = 1.
class Profile {
 public:
  enum class Family { kMonotone, kExample1, kExample2, kCustom };

  //! Deepest pair the dyadic grid can materialize: y_500' = 2^-1000 is
  //! still a normal double, 2^-2000 would underflow. Larger depths keep
  //! their requested depth() for the analytic invariants (sigma, alpha)
  //! but the evaluation window stays at this many pairs.
  static constexpr int kMaxWindowPairs = 500;

  static Profile monotone(int depth = 16, double f0 = 0.0);
  static Profile example1(int depth = 16, double f0 = 0.0);
  static Profile example2(double beta, int depth = 16, double f0 = 0.0);
  static Profile custom(std::vector<std::array<double, 2>> y_f_nodes);

  //! f(y). Throws RangeError outside [y_min(), 1].
  double f(double y) const;

  //! f*(y) = max(f on [y, 1]) - f(y), the oscillation above depth y.
  //! Exact over the PL nodes in the window. Same domain as f().
  double fstar(double y) const;

  //! limsup of f* as y -> 0. Closed form for the built-in families,
  //! estimated from the deepest nodes for custom data (see SigmaValue).
  SigmaValue sigma() const;

  Family family() const { return family_; }
  double beta() const { return beta_; }
  double f0() const { return f0_; }
  int depth() const { return depth_; }

  //! Oscillation pairs actually materialized as nodes:
  //! min(depth, kMaxWindowPairs) for the oscillating families.
  int window_pairs() const { return int((us_.size() - 1) / 2); }

  //! Smallest y in the representable window (deepest node).
  double y_min() const;
  double u_max() const { return us_.back(); }

  //! Nodes in the depth coordinate, ascending u (descending y).
  const std::vector<double>& us() const { return us_; }
  const std::vector<double>& fs() const { return fs_; }

  //! Depth coordinate of y; exact when y is a power of two.
  static double u_of_y(double y);
  static double y_of_u(double u);

 private:
  Profile(Family family, double beta, double f0, int depth,
          std::vector<double> us, std::vector<double> fs);

  void check_domain(double y) const;
  double f_at_u(double u) const;

  Family family_;
  double beta_ = 0.0;
  double f0_ = 0.0;
  int depth_ = 0;
  std::vector<double> us_, fs_;
  std::vector<double> prefmax_;  // running max of fs_ over nodes 0..i
};

//! The profile of f∘h + k, re-sampled onto PL nodes: images of the old
//! nodes (which keep their f values exactly) plus the breakpoints of h and
//! k and the window endpoints. Requires h(1) <= 1 so the result still
//! spans up to y = 1.
Profile apply_witness(const Profile& p, const WitnessH& h, const WitnessK& k);

//! Largest y* such that for every node y <= y* of apply_witness(p, h, 0),
//! the reparametrized oscillation equals f* of the original at h(y)
//! exactly: below y*, the running max over [h(y), 1] already dominates
//! everything f does on [h(1), 1], so the missing edge piece cannot
//! contribute.
double witness_threshold(const Profile& p, const WitnessH& h);

//! One oscillation block: f climbs to a local running max at y, then dips
//! by fstar_y_prime down to y_prime.
struct OscPair {
  double y = 0.0;        // least y above y_prime with f*(y) = 0
  double y_prime = 0.0;  // argmax of f* inside the block
  double f_y = 0.0;
  double f_y_prime = 0.0;
  double fstar_y_prime = 0.0;
};

//! Oscillation sequence of a nonstandard profile: N blocks with
//! f*(y_n') above the threshold, y_n strictly decreasing, and
//! f(y_n) = max(f on [y_n', 1]) exactly. alpha_values are f(y_n) mod 1.
struct OscillationSeq {
  std::vector<OscPair> pairs;
  std::vector<double> alpha_values;
};

//! Extracts the first N oscillation blocks whose amplitude exceeds the
//! threshold (default sigma/2). Throws std::invalid_argument for a
//! standard profile (sigma = 0), when sigma is the infinity flag and no
//! threshold is supplied, or when the window depth yields fewer than N
//! blocks.
OscillationSeq extract_osc_seq(const Profile& p, int n,
                               std::optional<double> threshold = std::nullopt);

//! The unclustered sequence {f(y_n) mod 1 : n = 1..N}. For the
//! oscillating families this extends past the materialized window via the
//! closed-form generator (bitwise equal to node data where both exist);
//! custom profiles are limited to the blocks their window contains.
std::vector<double> alpha_raw_values(const Profile& p, int n);

//! Circular clustering of {f(y_n) mod 1 : n <= N} at the given resolution;
//! returns one representative per cluster, each cluster spanning at most
//! `resolution` around the circle. A singleton means the f(y_n) converge
//! mod 1 without passing to a subsequence.
std::vector<double> alpha_accumulation(const Profile& p, int n,
                                       double resolution);

}  // namespace reeb
