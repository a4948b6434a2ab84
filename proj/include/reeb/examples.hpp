// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reeb/annulus.hpp"
#include "reeb/circle.hpp"
#include "reeb/profile.hpp"

namespace reeb {

//! Maximal y-interval on which the profile is strictly monotone and
//! crosses no integer level in its interior. The blocks tile the window
//! (y_min, 1] with shared endpoints; on a profile with integer values at
//! all its local extrema, every block's f-range is exactly one unit
//! [m, m+1], which is what makes the glue solve well posed.
struct GlueBlock {
  double y_lo = 0.0, y_hi = 0.0;  // y_lo < y_hi
  double f_lo = 0.0, f_hi = 0.0;  // f at y_lo and at y_hi
  bool increasing_in_y = false;   // direction of f as y grows
  // block nodes, ascending in u = log2(1/y) (i.e. descending y)
  std::vector<double> us, fs;
};

//! Splits the profile into glue blocks. Throws std::invalid_argument if
//! the profile has a flat segment (no strictly monotone tiling exists).
std::vector<GlueBlock> extract_glue_blocks(const Profile& p);

//! The circle action glued across the blocks of `p` with both boundary
//! actions equal to psi: x moves by psi^t and y is re-solved inside its
//! block so that both intertwining relations pi_i o phi^t = psi^t o pi_i
//! hold. Requires every block endpoint of p to have an integer f-value;
//! otherwise throws GlueConstraintViolation carrying the fractional part
//! psi would have to commute with.
AnnulusAction build_example1_action(const CircleAction& psi, const Profile& p);

//! The translation amount the glue solve applies in the f-coordinate:
//! lift(psi^tau)(x) - lift(psi^tau)(x - f(y)). Strictly increasing in the
//! f-value and fixing integers; exposed so tests can check it stays
//! strictly inside a block's f-range for non-endpoint inputs.
double glue_delta(const CircleAction& psi, double tau, double x, double fy);

//! {f(y_n) mod 1, f(y_n') mod 1 : n <= N} over the oscillation sequence —
//! the rotations any glued-style action's boundary pair must commute
//! with. Empty for a standard profile (no oscillation blocks).
std::vector<double> glue_constraints(const Profile& p, int n);

inline constexpr const char* kVerdictForced =
    "boundary actions forced to rotations";
inline constexpr const char* kVerdictConjugatePair =
    "rotation-conjugate pair";
inline constexpr const char* kVerdictInconclusive = "inconclusive";

//! Outcome of the rigidity analysis: the commutation constraints a glued
//! action's boundaries must satisfy, and what they force.
struct RigidityReport {
  std::vector<double> constraints;     // glue constraints (raw, sorted)
  std::vector<double> alpha_clusters;  // accumulation clusters of f(y_n)
  double max_gap = 1.0;  // largest circular gap of the combined set
  std::string verdict;
  std::optional<double> alpha;  // set for the conjugate-pair verdict
  int n = 0;
  double resolution = 0.0;
};

//! Combines glue_constraints with the alpha accumulation set. A set that
//! is `resolution`-dense forces both boundary actions to be rotations; a
//! single cluster alpha yields the conjugate-pair verdict. Throws
//! std::invalid_argument for a standard profile, whose boundary actions
//! are unconstrained (product-extension regime).
RigidityReport rigidity_report(const Profile& p, int n, double resolution);

//! The nearest fraction p/q with q <= max_den when x is within tol of it;
//! used to warn that a nominally irrational parameter will not produce a
//! dense constraint set.
std::optional<std::pair<long, long>> near_rational(double x,
                                                   long max_den = 16,
                                                   double tol = 1e-12);

}  // namespace reeb
