// SPDX-License-Identifier: Apache-2.0

#include "reeb/examples.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "reeb/errors.hpp"

namespace reeb {

namespace {

constexpr double kEndpointTol = 1e-9;  // integrality check on block endpoints

void finish_block(std::vector<GlueBlock>& out, std::vector<double>&& us,
                  std::vector<double>&& fs) {
  GlueBlock b;
  b.us = std::move(us);
  b.fs = std::move(fs);
  b.y_hi = Profile::y_of_u(b.us.front());
  b.y_lo = Profile::y_of_u(b.us.back());
  b.f_hi = b.fs.front();
  b.f_lo = b.fs.back();
  b.increasing_in_y = b.fs.back() < b.fs.front();
  out.push_back(std::move(b));
}

//! Inverts the block's monotone PL data at the value v (clamped to the
//! block range by at most `slack` to absorb roundoff).
double block_invert_u(const GlueBlock& b, double v) {
  constexpr double slack = 1e-9;
  const bool asc = b.fs.back() > b.fs.front();  // ascending in u
  const double lo = asc ? b.fs.front() : b.fs.back();
  const double hi = asc ? b.fs.back() : b.fs.front();
  if (v < lo - slack || v > hi + slack)
    throw std::logic_error("glue solve left its block's f-range");
  const double vc = std::clamp(v, lo, hi);
  // find the segment whose f-range contains vc
  std::size_t i = 0;
  for (; i + 2 < b.fs.size(); ++i) {
    const double c = b.fs[i + 1];
    if (asc ? (vc <= c) : (vc >= c)) break;
  }
  if (vc == b.fs[i]) return b.us[i];
  if (vc == b.fs[i + 1]) return b.us[i + 1];
  const double t = (vc - b.fs[i]) / (b.fs[i + 1] - b.fs[i]);
  return b.us[i] + t * (b.us[i + 1] - b.us[i]);
}

}  // namespace

std::vector<GlueBlock> extract_glue_blocks(const Profile& p) {
  const auto& us = p.us();
  const auto& fs = p.fs();
  std::vector<GlueBlock> out;
  std::vector<double> bus{us[0]}, bfs{fs[0]};
  int dir = 0;  // +1 f ascending in u, -1 descending
  for (std::size_t i = 0; i + 1 < us.size(); ++i) {
    const double a = fs[i], b = fs[i + 1];
    if (a == b)
      throw std::invalid_argument(
          "profile has a flat segment: no strictly monotone block tiling");
    const int d = (b > a) ? 1 : -1;
    if (dir != 0 && d != dir) {
      // local extremum: close the block at node i and restart there
      finish_block(out, std::move(bus), std::move(bfs));
      bus = {us[i]};
      bfs = {fs[i]};
    }
    dir = d;
    // split at every integer level crossed strictly inside the segment
    const long m_lo = long(std::floor(std::min(a, b))) + 1;
    const long m_hi = long(std::ceil(std::max(a, b))) - 1;
    if (d > 0) {
      for (long m = m_lo; m <= m_hi; ++m) {
        const double mv = double(m);
        if (!(mv > a && mv < b)) continue;
        const double uc = us[i] + (mv - a) / (b - a) * (us[i + 1] - us[i]);
        bus.push_back(uc);
        bfs.push_back(mv);
        finish_block(out, std::move(bus), std::move(bfs));
        bus = {uc};
        bfs = {mv};
      }
    } else {
      for (long m = m_hi; m >= m_lo; --m) {
        const double mv = double(m);
        if (!(mv < a && mv > b)) continue;
        const double uc = us[i] + (mv - a) / (b - a) * (us[i + 1] - us[i]);
        bus.push_back(uc);
        bfs.push_back(mv);
        finish_block(out, std::move(bus), std::move(bfs));
        bus = {uc};
        bfs = {mv};
      }
    }
    bus.push_back(us[i + 1]);
    bfs.push_back(fs[i + 1]);
  }
  finish_block(out, std::move(bus), std::move(bfs));
  return out;
}

double glue_delta(const CircleAction& psi, double tau, double x, double fy) {
  const double n = std::floor(fy);
  const double r = fy - n;  // exact for |fy| < 2^52
  return psi.act_lift(x, tau) - psi.act_lift(x - r, tau) + n;
}

AnnulusAction build_example1_action(const CircleAction& psi,
                                    const Profile& p) {
  auto blocks = std::make_shared<std::vector<GlueBlock>>(extract_glue_blocks(p));

  std::vector<double> offending;
  for (const GlueBlock& b : *blocks) {
    for (double v : {b.f_hi, b.f_lo})
      if (std::fabs(v - std::round(v)) > kEndpointTol)
        offending.push_back(v);
  }
  if (!offending.empty()) {
    const double c = wrap_unit(offending.front());
    throw GlueConstraintViolation(
        "glue blocks have non-integer endpoint values: the boundary "
        "action would have to commute with the rotation by " +
            std::to_string(c),
        c, offending);
  }

  Profile profile = p;
  CircleAction action = psi;
  auto interior = [action, profile, blocks](double tau, const AnnulusPoint& xi) {
    const double fy = profile.f(xi.y);
    const double dv = glue_delta(action, tau, xi.x, fy);
    // locate the block containing this depth
    const double u = std::min(Profile::u_of_y(xi.y), profile.u_max());
    std::size_t lo = 0, hi = blocks->size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if ((*blocks)[mid].us.front() <= u)
        lo = mid;
      else
        hi = mid - 1;
    }
    const double x1 = action.act_lift(xi.x, tau);
    const double y1 = Profile::y_of_u(block_invert_u((*blocks)[lo], dv));
    return AnnulusPoint::interior(x1, y1);
  };
  return AnnulusAction::glued(std::move(profile), std::move(action),
                              std::move(interior));
}

std::vector<double> glue_constraints(const Profile& p, int n) {
  const SigmaValue s = p.sigma();
  if (!s.is_infinite && !(s.value > 0.0)) return {};
  std::vector<double> vals;
  const Profile::Family fam = p.family();
  if (fam == Profile::Family::kExample1 || fam == Profile::Family::kExample2) {
    // Closed-form generator: constraints extend past the materialized
    // window, matching the node values bitwise where both exist.
    const double step = fam == Profile::Family::kExample1 ? 1.0 : p.beta();
    vals.reserve(2 * std::size_t(n));
    for (int i = 1; i <= n; ++i) {
      const double peak = p.f0() + double(i) * step;
      vals.push_back(wrap_unit(peak));
      vals.push_back(wrap_unit(peak - 1.0));
    }
  } else {
    OscillationSeq seq = extract_osc_seq(p, n);
    vals.reserve(2 * seq.pairs.size());
    for (const OscPair& pr : seq.pairs) {
      vals.push_back(wrap_unit(pr.f_y));
      vals.push_back(wrap_unit(pr.f_y_prime));
    }
  }
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

RigidityReport rigidity_report(const Profile& p, int n, double resolution) {
  if (!(resolution > 0.0))
    throw std::invalid_argument("resolution must be positive");
  const SigmaValue s = p.sigma();
  if (!s.is_infinite && !(s.value > 0.0))
    throw std::invalid_argument(
        "standard profile (sigma = 0): boundary actions are unconstrained "
        "(product-extension regime)");

  RigidityReport rep;
  rep.n = n;
  rep.resolution = resolution;
  rep.constraints = glue_constraints(p, n);
  rep.alpha_clusters = alpha_accumulation(p, n, resolution);

  std::vector<double> all = rep.constraints;
  all.insert(all.end(), rep.alpha_clusters.begin(), rep.alpha_clusters.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.size() < 2) {
    rep.max_gap = 1.0;
  } else {
    rep.max_gap = 1.0 - all.back() + all.front();
    for (std::size_t i = 1; i < all.size(); ++i)
      rep.max_gap = std::max(rep.max_gap, all[i] - all[i - 1]);
  }

  if (rep.max_gap < resolution) {
    rep.verdict = kVerdictForced;
  } else if (rep.alpha_clusters.size() == 1) {
    const double a = rep.alpha_clusters.front();
    bool consistent = true;
    for (double c : rep.constraints)
      consistent = consistent && circle_dist(c, a) <= resolution;
    if (consistent) {
      rep.verdict = kVerdictConjugatePair;
      rep.alpha = a;
    } else {
      rep.verdict = kVerdictInconclusive;
    }
  } else {
    rep.verdict = kVerdictInconclusive;
  }
  return rep;
}

std::optional<std::pair<long, long>> near_rational(double x, long max_den,
                                                   double tol) {
  for (long q = 1; q <= max_den; ++q) {
    const long p = std::lround(x * double(q));
    if (std::fabs(x - double(p) / double(q)) <= tol) return {{p, q}};
  }
  return std::nullopt;
}

}  // namespace reeb
