// SPDX-License-Identifier: Apache-2.0

#include "reeb/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "reeb/errors.hpp"

namespace reeb {

namespace {

//! Signed circle difference a - b, taken in (-1/2, 1/2].
double signed_circle_diff(double a, double b) {
  return wrap_unit(a - b + 0.5) - 0.5;
}

}  // namespace

Projections projections(const AnnulusPoint& pt, const Profile& profile) {
  Projections pr;
  if (!pt.is_interior) {
    (pt.side == 0 ? pr.pi0 : pr.pi1) = pt.x;
    return pr;
  }
  pr.p = pt.y;
  pr.pi0 = pt.x;
  pr.pi1 = wrap_unit(pt.x - profile.f(pt.y));
  return pr;
}

AnnulusAction::AnnulusAction(Kind k, Profile p, CircleAction psi0,
                             CircleAction psi1, InteriorMap interior)
    : kind_(k),
      profile_(std::move(p)),
      psi0_(std::move(psi0)),
      psi1_(std::move(psi1)),
      interior_(std::move(interior)) {}

AnnulusAction AnnulusAction::horizontal_rotation(Profile p) {
  return AnnulusAction(Kind::kHorizontalRotation, std::move(p),
                       CircleAction::rotation(), CircleAction::rotation(),
                       nullptr);
}

AnnulusAction AnnulusAction::glued(Profile p, CircleAction psi,
                                   InteriorMap interior) {
  if (!interior)
    throw std::invalid_argument("glued action needs an interior evaluator");
  CircleAction copy = psi;
  return AnnulusAction(Kind::kGlued, std::move(p), std::move(psi),
                       std::move(copy), std::move(interior));
}

AnnulusAction AnnulusAction::custom_pair(Profile p, CircleAction psi0,
                                         CircleAction psi1,
                                         InteriorMap interior) {
  if (!interior) {
    CircleAction a0 = psi0;
    interior = [a0](double t, const AnnulusPoint& xi) {
      return AnnulusPoint::interior(reeb::act(a0, t, xi.x), xi.y);
    };
  }
  return AnnulusAction(Kind::kCustomPair, std::move(p), std::move(psi0),
                       std::move(psi1), std::move(interior));
}

const CircleAction& AnnulusAction::boundary_action(int side) const {
  if (side != 0 && side != 1)
    throw std::invalid_argument("boundary side must be 0 or 1");
  return side == 0 ? psi0_ : psi1_;
}

AnnulusPoint AnnulusAction::act(double t, const AnnulusPoint& xi) const {
  const double tau = wrap_unit(t);
  if (tau == 0.0) return xi;  // period one, exactly
  if (!xi.is_interior)
    return AnnulusPoint::boundary(
        xi.side, boundary_action(xi.side).act(tau, CirclePoint(xi.x)).value());
  if (kind_ == Kind::kHorizontalRotation)
    return AnnulusPoint::interior(xi.x + tau, xi.y);
  return interior_(tau, xi);
}

double delta(const AnnulusAction& a, const AnnulusPoint& xi, double step) {
  if (!xi.is_interior)
    throw std::invalid_argument("delta is defined on interior points");
  const int n = std::max(1, int(std::ceil(std::fabs(step) / 0.01)));
  double acc = 0.0;
  double prev = wrap_unit(a.profile().f(xi.y));  // pi0 - pi1 mod 1 at xi
  for (int j = 1; j <= n; ++j) {
    const AnnulusPoint im = a.act(step * double(j) / double(n), xi);
    if (!im.is_interior)
      throw std::invalid_argument("orbit segment leaves the interior");
    const double cur = wrap_unit(a.profile().f(im.y));
    acc += signed_circle_diff(cur, prev);
    prev = cur;
  }
  return acc;
}

std::vector<double> find_horizontal_points(const AnnulusAction& a, double y,
                                           double step) {
  constexpr int kBrackets = 512;
  constexpr double kXTol = 1e-10;
  auto residual = [&](double x) {
    const AnnulusPoint im = a.act(step, AnnulusPoint::interior(x, y));
    if (!im.is_interior)
      throw std::invalid_argument("image left the interior");
    return im.y - y;
  };

  double g[kBrackets + 1];
  double min_abs = std::fabs(residual(0.0));
  g[0] = g[kBrackets] = residual(0.0);
  bool all_zero = std::fabs(g[0]) <= 1e-12;
  for (int i = 1; i < kBrackets; ++i) {
    g[i] = residual(double(i) / kBrackets);
    min_abs = std::min(min_abs, std::fabs(g[i]));
    all_zero = all_zero && std::fabs(g[i]) <= 1e-12;
  }
  if (all_zero) {
    // The whole level circle is invariant: every sampled point qualifies.
    std::vector<double> xs(kBrackets);
    for (int i = 0; i < kBrackets; ++i) xs[i] = double(i) / kBrackets;
    return xs;
  }

  std::vector<double> roots;
  for (int i = 0; i < kBrackets; ++i) {
    double lo = double(i) / kBrackets, hi = double(i + 1) / kBrackets;
    double glo = g[i], ghi = g[i + 1];
    if (std::fabs(glo) <= 1e-14) {
      roots.push_back(lo);
      continue;
    }
    if (glo * ghi >= 0.0) continue;
    while (hi - lo > kXTol) {
      const double mid = 0.5 * (lo + hi);
      const double gm = residual(mid);
      if (gm == 0.0) {
        lo = hi = mid;
        break;
      }
      (glo * gm < 0.0 ? hi : lo) = mid;
      (glo * gm < 0.0 ? ghi : glo) = gm;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  if (roots.empty())
    throw HorizontalPointsNotFound(
        "no horizontally going point at y = " + std::to_string(y) +
            "; smallest |p(act(step)) - y| over the grid was " +
            std::to_string(min_abs),
        min_abs);
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots)
    if (unique.empty() || r - unique.back() > 2e-10) unique.push_back(r);
  if (unique.size() > 1 && 1.0 - unique.back() + unique.front() <= 2e-10)
    unique.pop_back();  // wraps onto the first root
  return unique;
}

CommutationReport verify_commutation(const AnnulusAction& a, double alpha,
                                     int samples) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  const CircleAction& phi0 = a.boundary_action(0);
  const CircleAction& phi1 = a.boundary_action(1);

  std::vector<double> ts, xs;
  ts.reserve(samples + 3);
  for (int j = 0; j < samples; ++j) ts.push_back((j + 0.5) / samples);
  ts.push_back(1.0);
  ts.push_back(0.5);
  ts.push_back(0.25);
  xs.reserve(samples + phi0.conjugator().vs().size() +
             phi1.conjugator().vs().size());
  for (int j = 0; j < samples; ++j) xs.push_back(double(j) / samples);
  for (double v : phi0.conjugator().vs()) xs.push_back(wrap_unit(v));
  for (double v : phi1.conjugator().vs()) xs.push_back(wrap_unit(v));

  CommutationReport rep;
  rep.alpha = alpha;
  rep.samples = samples;
  for (double t : ts)
    for (double x : xs) {
      const CirclePoint lhs = phi1.act(t, CirclePoint(x)) + alpha;
      const CirclePoint rhs = phi0.act(t, CirclePoint(x + alpha));
      const double d = dist(lhs, rhs);
      if (d > rep.residual) {
        rep.residual = d;
        rep.worst_t = t;
        rep.worst_x = x;
      }
    }
  return rep;
}

double involution_residual(const CircleAction& phi, double alpha,
                           int samples) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  auto J = [&](double x) {
    const double rot = wrap_unit(x + alpha);
    const double half = act(phi, 0.5, rot);
    return wrap_unit(half - alpha);
  };
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x = double(j) / samples;
    worst = std::max(worst, circle_dist(J(J(x)), x));
  }
  return worst;
}

double boundary_extension_residual(const AnnulusAction& a, int side,
                                   double y_near, int samples) {
  if (samples < 1) throw std::invalid_argument("need samples >= 1");
  const CircleAction& psi = a.boundary_action(side);
  const double fy = a.profile().f(y_near);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = double(i) / samples;
    // interior point whose side-i projection is x
    const double x0 = (side == 0) ? x : wrap_unit(x + fy);
    for (int j = 1; j <= 8; ++j) {
      const double t = double(j) / 8.0;
      const AnnulusPoint im = a.act(t, AnnulusPoint::interior(x0, y_near));
      if (!im.is_interior) continue;
      const Projections pr = projections(im, a.profile());
      const double got = (side == 0) ? *pr.pi0 : *pr.pi1;
      const double want = act(psi, t, x);
      worst = std::max(worst, circle_dist(got, want));
    }
  }
  return worst;
}

}  // namespace reeb
