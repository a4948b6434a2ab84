// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "reeb/circle.hpp"
#include "reeb/profile.hpp"

namespace reeb {

//! Point of the quotient annulus. Interior points are stored in chart-0
//! coordinates only (x on the circle, depth y > 0); the chart-1 coordinate
//! is derived through the gluing, so the transition identity is a checked
//! invariant rather than stored data. Boundary points carry the single
//! circle coordinate of their side.
struct AnnulusPoint {
  static AnnulusPoint interior(double x, double y) {
    return {true, -1, wrap_unit(x), y};
  }
  static AnnulusPoint boundary(int side, double x) {
    return {false, side, wrap_unit(x), 0.0};
  }

  bool is_interior = true;
  int side = -1;   // 0 or 1 for boundary points
  double x = 0.0;  // canonical circle coordinate
  double y = 0.0;  // depth, interior points only
};

//! The three projections where defined: p (depth), pi0 (chart-0 angle),
//! pi1 (chart-1 angle). Interior points expose all three with
//! pi1 = pi0 - f(p) mod 1; a boundary point exposes only its own angle.
struct Projections {
  std::optional<double> p, pi0, pi1;
};

Projections projections(const AnnulusPoint& pt, const Profile& profile);

//! Free circle action on the annulus. Time is reduced mod 1 before
//! evaluation, so integer times are the identity bit-for-bit. The interior
//! rule depends on the kind:
//!
//!   kHorizontalRotation  (x, y) -> (x + t, y)
//!   kGlued               x -> psi^t(x), y through the glue solve supplied
//!                        by the builder (one psi, both boundaries)
//!   kCustomPair          independently prescribed boundary actions; the
//!                        interior evaluator defaults to x -> psi0^t(x)
//!                        with y fixed, which extends continuously to
//!                        side 0 but matches side 1 only if psi1 == psi0
class AnnulusAction {
 public:
  enum class Kind { kHorizontalRotation, kGlued, kCustomPair };

  //! Interior evaluator; receives the time already reduced to [0, 1).
  using InteriorMap =
      std::function<AnnulusPoint(double, const AnnulusPoint&)>;

  static AnnulusAction horizontal_rotation(Profile p);
  static AnnulusAction glued(Profile p, CircleAction psi, InteriorMap interior);
  static AnnulusAction custom_pair(Profile p, CircleAction psi0,
                                   CircleAction psi1,
                                   InteriorMap interior = nullptr);

  AnnulusPoint act(double t, const AnnulusPoint& xi) const;

  //! The circle action phi_i with phi_i o pi_i = pi_i o phi on side i.
  const CircleAction& boundary_action(int side) const;

  Kind kind() const { return kind_; }
  const Profile& profile() const { return profile_; }

 private:
  AnnulusAction(Kind k, Profile p, CircleAction psi0, CircleAction psi1,
                InteriorMap interior);

  Kind kind_;
  Profile profile_;
  CircleAction psi0_, psi1_;
  InteriorMap interior_;
};

//! Real-valued change of the angle gap pi0 - pi1 along the orbit segment
//! from xi to act(step, xi), with the lift chosen continuously along a
//! sampled polyline (dt <= 0.01). Vanishes at horizontally going points;
//! on the invariant circles it equals f(p(act(step, xi))) - f(p(xi)).
//! Throws std::invalid_argument if xi or its image is not interior.
double delta(const AnnulusAction& a, const AnnulusPoint& xi,
             double step = 0.5);

//! All x (up to resolution) with p(act(step, (x, y))) = y: 512 brackets
//! around the circle, bisection to 1e-10. When the whole level circle is
//! invariant the sampled grid itself is returned. Throws
//! HorizontalPointsNotFound with the smallest residual seen when no root
//! exists at this resolution.
std::vector<double> find_horizontal_points(const AnnulusAction& a, double y,
                                           double step = 0.5);

//! Worst mismatch of R_alpha o phi_1^t vs phi_0^t o R_alpha over a
//! deterministic (t, x) sweep that always includes the dyadic times
//! 1, 1/2, 1/4.
struct CommutationReport {
  double residual = 0.0;
  double worst_t = 0.0;
  double worst_x = 0.0;
  double alpha = 0.0;
  int samples = 0;
};

CommutationReport verify_commutation(const AnnulusAction& a, double alpha,
                                     int samples);

//! Max over x of d(J(J(x)), x) where J = R_alpha^(-1) o phi^(1/2) o R_alpha;
//! J is an involution because phi has period one.
double involution_residual(const CircleAction& phi, double alpha, int samples);

//! Max over sampled (t, x) of the mismatch between the interior action
//! near side i (evaluated on the circle p = y_near through the side-i
//! projection) and the stored boundary action. Near zero when the
//! boundary action is the continuous extension of the interior one.
double boundary_extension_residual(const AnnulusAction& a, int side,
                                   double y_near, int samples);

}  // namespace reeb
