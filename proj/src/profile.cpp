// SPDX-License-Identifier: Apache-2.0

#include "reeb/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "reeb/circle.hpp"
#include "reeb/errors.hpp"

namespace reeb {

namespace {

constexpr double kUGap = 1e-12;      // minimum node spacing in u
constexpr double kZeroTol = 1e-12;   // f* below this counts as a block boundary

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace

double Profile::u_of_y(double y) {
  int e;
  const double m = std::frexp(y, &e);  // y = m * 2^e, m in [0.5, 1)
  if (m == 0.5) return double(1 - e);  // exact for powers of two
  return -(double(e) + std::log2(m));
}

double Profile::y_of_u(double u) { return std::exp2(-u); }

Profile::Profile(Family family, double beta, double f0, int depth,
                 std::vector<double> us, std::vector<double> fs)
    : family_(family),
      beta_(beta),
      f0_(f0),
      depth_(depth),
      us_(std::move(us)),
      fs_(std::move(fs)) {
  if (us_.size() != fs_.size() || us_.size() < 2)
    throw std::invalid_argument("profile needs at least 2 nodes");
  for (std::size_t i = 0; i < us_.size(); ++i) {
    if (!std::isfinite(us_[i]) || !std::isfinite(fs_[i]))
      throw std::invalid_argument("profile nodes must be finite");
    if (i > 0 && !(us_[i] - us_[i - 1] >= kUGap))
      throw std::invalid_argument("profile nodes must be strictly deeper");
  }
  if (us_.front() != 0.0)
    throw std::invalid_argument("profile must anchor a node at y = 1");
  prefmax_.resize(fs_.size());
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    m = std::max(m, fs_[i]);
    prefmax_[i] = m;
  }
}

Profile Profile::monotone(int depth, double f0) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const double umax = 2.0 * std::min(depth, kMaxWindowPairs);
  return Profile(Family::kMonotone, 0.0, f0, depth, {0.0, umax},
                 {f0, f0 + umax});
}

Profile Profile::example1(int depth, double f0) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  std::vector<double> us{0.0}, fs{f0};
  for (int n = 1; n <= std::min(depth, kMaxWindowPairs); ++n) {
    const double peak = f0 + double(n);
    us.push_back(2.0 * n - 1.0);  // y_n = 2^(1-2n)
    fs.push_back(peak);
    us.push_back(2.0 * n);        // y_n' = 2^(-2n)
    fs.push_back(peak - 1.0);     // exact: peak < 2^53
  }
  return Profile(Family::kExample1, 0.0, f0, depth, std::move(us),
                 std::move(fs));
}

Profile Profile::example2(double beta, int depth, double f0) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw std::invalid_argument("beta must be positive and finite");
  std::vector<double> us{0.0}, fs{f0};
  for (int n = 1; n <= std::min(depth, kMaxWindowPairs); ++n) {
    const double peak = f0 + double(n) * beta;
    us.push_back(2.0 * n - 1.0);
    fs.push_back(peak);
    us.push_back(2.0 * n);
    fs.push_back(peak - 1.0);
  }
  return Profile(Family::kExample2, beta, f0, depth, std::move(us),
                 std::move(fs));
}

Profile Profile::custom(std::vector<std::array<double, 2>> y_f_nodes) {
  if (y_f_nodes.size() < 2)
    throw std::invalid_argument("custom profile needs at least 2 nodes");
  std::vector<std::array<double, 2>> uf;
  uf.reserve(y_f_nodes.size());
  for (const auto& [y, v] : y_f_nodes) {
    if (!(y > 0.0) || y > 1.0)
      throw std::invalid_argument("custom profile nodes need y in (0, 1]");
    uf.push_back({u_of_y(y), v});
  }
  std::sort(uf.begin(), uf.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<double> us, fs;
  for (const auto& [u, v] : uf) {
    if (!us.empty() && u - us.back() < kUGap) {
      if (std::fabs(v - fs.back()) > 1e-9)
        throw std::invalid_argument(
            "custom profile has conflicting values at duplicate depth u = " +
            fmt(u));
      continue;
    }
    us.push_back(u);
    fs.push_back(v);
  }
  if (std::fabs(us.front()) > kUGap)
    throw std::invalid_argument("custom profile must anchor a node at y = 1");
  us.front() = 0.0;
  const double f0 = fs.front();
  return Profile(Family::kCustom, 0.0, f0, 0, std::move(us), std::move(fs));
}

double Profile::y_min() const { return y_of_u(us_.back()); }

void Profile::check_domain(double y) const {
  if (!(y > 0.0) || y > 1.0 || u_of_y(y) > us_.back() + 1e-12)
    throw RangeError("y = " + fmt(y) + " outside profile window [" +
                     fmt(y_min()) + ", 1]");
}

double Profile::f_at_u(double u) const {
  return interp_segment(us_, fs_, segment_index(us_, u), u);
}

double Profile::f(double y) const {
  check_domain(y);
  return f_at_u(std::min(u_of_y(y), us_.back()));
}

double Profile::fstar(double y) const {
  check_domain(y);
  const double u = std::min(u_of_y(y), us_.back());
  const std::size_t i = segment_index(us_, u);
  const double fv = interp_segment(us_, fs_, i, u);
  // Max over [y, 1] is over the nodes up to u plus the point u itself;
  // f is linear between nodes, so no interior point can beat these.
  return std::max(prefmax_[i], fv) - fv;
}

SigmaValue Profile::sigma() const {
  if (family_ == Family::kMonotone) return {0.0, false, false, 0.0, 0.0};
  if (family_ == Family::kExample1 || family_ == Family::kExample2) {
    // Block amplitudes f(y_n) - f(y_n'); sigma is their limit when stable.
    const int pairs = window_pairs();
    const double last = fs_[2 * pairs - 1] - fs_[2 * pairs];
    bool stable = true;
    for (int n = 1; n < pairs && stable; ++n)
      stable = std::fabs(fs_[2 * n - 1] - fs_[2 * n] - last) <= 1e-12;
    if (stable) return {last, false, false, last, last};
  }

  // Estimate from the deepest half of the window: split it into four
  // bands and take the max oscillation over the nodes of each.
  const double tail_lo = us_.back() / 2.0;
  const double w = (us_.back() - tail_lo) / 4.0;
  double m[4];
  bool seen[4] = {false, false, false, false};
  for (std::size_t i = 0; i < us_.size(); ++i) {
    if (us_[i] < tail_lo) continue;
    int j = (w > 0.0) ? int((us_[i] - tail_lo) / w) : 3;
    j = std::min(j, 3);
    const double g = prefmax_[i] - fs_[i];
    if (!seen[j] || g > m[j]) m[j] = g, seen[j] = true;
  }
  std::vector<double> ms;
  for (int j = 0; j < 4; ++j)
    if (seen[j]) ms.push_back(m[j]);

  SigmaValue s;
  if (ms.size() < 2) {
    s.value = s.lo = s.hi = ms.empty() ? 0.0 : ms[0];
    return s;
  }
  const double hi = *std::max_element(ms.begin(), ms.end());
  const double lo = *std::min_element(ms.begin(), ms.end());
  if (hi - lo <= 1e-9 * std::max(1.0, std::fabs(hi))) {
    s.value = s.lo = s.hi = ms.back();
    return s;
  }
  bool growing = true;
  for (std::size_t j = 1; j < ms.size(); ++j) growing &= ms[j] > ms[j - 1];
  if (growing && ms.back() - ms[ms.size() - 2] >= 0.5 * (ms[1] - ms[0])) {
    s.is_infinite = true;
    s.value = s.hi = std::numeric_limits<double>::infinity();
    s.lo = ms.front();
    return s;
  }
  s.is_estimate = true;
  s.lo = lo;
  s.hi = hi;
  s.value = 0.5 * (lo + hi);
  return s;
}

WitnessH::WitnessH(std::vector<std::array<double, 2>> nodes) {
  if (nodes.size() < 2)
    throw std::invalid_argument("witness h needs at least 2 nodes");
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  if (nodes.front()[0] != 0.0 || nodes.front()[1] != 0.0)
    throw std::invalid_argument("witness h must fix 0 (first node (0, 0))");
  std::vector<double> xs, ys;
  for (const auto& [x, y] : nodes) {
    xs.push_back(x);
    ys.push_back(y);
  }
  pl_ = PiecewiseLinear(std::move(xs), std::move(ys),
                        PiecewiseLinear::Extend::Linear);
  if (!pl_.strictly_increasing())
    throw std::invalid_argument("witness h must be strictly increasing");
}

WitnessH WitnessH::identity() { return WitnessH({{0.0, 0.0}, {1.0, 1.0}}); }

WitnessK::WitnessK(std::vector<std::array<double, 2>> nodes) {
  if (nodes.empty()) throw std::invalid_argument("witness k needs nodes");
  if (nodes.size() == 1) nodes.push_back({nodes[0][0] + 1.0, nodes[0][1]});
  std::sort(nodes.begin(), nodes.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  std::vector<double> xs, ys;
  for (const auto& [x, y] : nodes) {
    xs.push_back(x);
    ys.push_back(y);
  }
  pl_ = PiecewiseLinear(std::move(xs), std::move(ys),
                        PiecewiseLinear::Extend::Constant);
}

WitnessK WitnessK::zero() { return WitnessK({{0.0, 0.0}, {1.0, 0.0}}); }

Profile apply_witness(const Profile& p, const WitnessH& h, const WitnessK& k) {
  const double h1 = h(1.0);
  if (h1 > 1.0)
    throw RangeError("h(1) = " + fmt(h1) +
                     " > 1: the reparametrized profile would not reach y = 1");
  const double y_lo = h.inverse(p.y_min());

  // Collect (u, value, priority) candidates; priority 0 entries carry node
  // values of f exactly and win ties against interpolated breakpoints.
  struct Cand {
    double u, v;
    int prio;
  };
  std::vector<Cand> cands;
  cands.reserve(p.us().size() + 8);
  for (std::size_t i = 0; i < p.us().size(); ++i) {
    const double y_old = Profile::y_of_u(p.us()[i]);
    const double y_new = h.inverse(y_old);
    if (y_new > 1.0 || y_new < y_lo) continue;
    cands.push_back({Profile::u_of_y(y_new), p.fs()[i] + k(y_new), 0});
  }
  auto f_of = [&](double y_new) {
    return p.f(std::clamp(h(y_new), p.y_min(), 1.0));
  };
  auto add_breakpoints = [&](const std::vector<double>& xs) {
    for (double x : xs)
      if (x > y_lo && x < 1.0)
        cands.push_back({Profile::u_of_y(x), f_of(x) + k(x), 1});
  };
  add_breakpoints(h.pl().xs());
  add_breakpoints(k.pl().xs());
  cands.push_back({0.0, f_of(1.0) + k(1.0), 0});
  cands.push_back({Profile::u_of_y(y_lo), f_of(y_lo) + k(y_lo), 0});

  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.u != b.u ? a.u < b.u : a.prio < b.prio;
  });
  std::vector<std::array<double, 2>> nodes;
  double prev_u = -1.0;
  for (const Cand& c : cands) {
    if (!nodes.empty() && c.u - prev_u < PiecewiseLinear::kMinGap) continue;
    nodes.push_back({Profile::y_of_u(c.u), c.v});
    prev_u = c.u;
  }
  return Profile::custom(std::move(nodes));
}

double witness_threshold(const Profile& p, const WitnessH& h) {
  const double h1 = h(1.0);
  if (h1 > 1.0)
    throw RangeError("h(1) = " + fmt(h1) + " > 1: no common window");
  const double u_edge = std::min(Profile::u_of_y(h1), p.u_max());
  const double m_edge = p.fstar(h1) + p.f(h1);  // max of f over [h(1), 1]

  // Walk deeper until the running max over [h(1), y] reaches m_edge; past
  // that depth the edge piece [h(1), 1] can no longer carry the maximum.
  const auto& us = p.us();
  const auto& fs = p.fs();
  double prev_u = u_edge;
  double prev_f = p.f(h1);
  if (prev_f >= m_edge) return h.inverse(h1);
  for (std::size_t j = segment_index(us, u_edge) + 1; j < us.size(); ++j) {
    if (us[j] <= u_edge) continue;
    if (fs[j] >= m_edge) {
      // crossing inside (prev_u, us[j]]: f is linear here
      const double t = (m_edge - prev_f) / (fs[j] - prev_f);
      const double u_t = prev_u + t * (us[j] - prev_u);
      return h.inverse(Profile::y_of_u(u_t));
    }
    prev_u = us[j];
    prev_f = fs[j];
  }
  throw RangeError(
      "profile window too shallow: f never reaches its edge maximum " +
      fmt(m_edge) + " below y = " + fmt(h1));
}

OscillationSeq extract_osc_seq(const Profile& p, int n,
                               std::optional<double> threshold) {
  if (n < 1) throw std::invalid_argument("need n >= 1 oscillation blocks");
  const SigmaValue s = p.sigma();
  double tau;
  if (threshold) {
    if (!(*threshold > 0.0))
      throw std::invalid_argument("oscillation threshold must be positive");
    tau = *threshold;
  } else if (s.is_infinite) {
    throw std::invalid_argument(
        "sigma is unbounded: supply an explicit oscillation threshold");
  } else if (!(s.value > 0.0)) {
    throw std::invalid_argument(
        "standard profile (sigma = 0): no oscillation sequence exists");
  } else {
    tau = s.value / 2.0;
  }

  const auto& us = p.us();
  const auto& fs = p.fs();
  OscillationSeq seq;
  // f* restricted to the nodes; a block runs from a node where f attains
  // its running max (f* = 0) down to the node where the dip is deepest.
  std::size_t start = 0, argmax = 0;
  double gmax = 0.0;
  bool open = false;
  auto close_block = [&]() {
    if (gmax > tau) {
      OscPair pr;
      pr.y = Profile::y_of_u(us[start]);
      pr.y_prime = Profile::y_of_u(us[argmax]);
      pr.f_y = fs[start];
      pr.f_y_prime = fs[argmax];
      pr.fstar_y_prime = gmax;
      seq.pairs.push_back(pr);
      seq.alpha_values.push_back(wrap_unit(fs[start]));
    }
    open = false;
    gmax = 0.0;
  };
  std::size_t last_zero = 0;
  double runmax = fs.front();
  for (std::size_t i = 0; i < us.size(); ++i) {
    runmax = std::max(runmax, fs[i]);
    const double g = runmax - fs[i];
    if (g <= kZeroTol) {
      if (open) close_block();
      last_zero = i;
    } else {
      if (!open) {
        open = true;
        start = last_zero;
        argmax = i;
        gmax = g;
      } else if (g > gmax) {
        argmax = i;
        gmax = g;
      }
    }
    if (int(seq.pairs.size()) == n) break;
  }
  if (open && int(seq.pairs.size()) < n) close_block();
  if (int(seq.pairs.size()) < n)
    throw std::invalid_argument(
        "profile window yields only " + std::to_string(seq.pairs.size()) +
        " oscillation blocks above threshold " + fmt(tau) + ", need " +
        std::to_string(n));
  seq.pairs.resize(n);
  seq.alpha_values.resize(n);
  return seq;
}

std::vector<double> alpha_raw_values(const Profile& p, int n) {
  if (n < 1) throw std::invalid_argument("need at least one oscillation pair");
  const Profile::Family fam = p.family();
  if (fam == Profile::Family::kExample1 || fam == Profile::Family::kExample2) {
    // The generator is closed form, so the sequence extends past the
    // materialized node window; where both exist the values coincide
    // bitwise with the node data.
    const double step = fam == Profile::Family::kExample1 ? 1.0 : p.beta();
    std::vector<double> vals;
    vals.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i)
      vals.push_back(wrap_unit(p.f0() + double(i) * step));
    return vals;
  }
  return extract_osc_seq(p, n).alpha_values;
}

std::vector<double> alpha_accumulation(const Profile& p, int n,
                                       double resolution) {
  if (!(resolution > 0.0))
    throw std::invalid_argument("resolution must be positive");
  std::vector<double> vals = alpha_raw_values(p, n);
  std::sort(vals.begin(), vals.end());

  // Rotate so the seam falls in the largest circular gap, then greedily
  // chain values into clusters of diameter at most `resolution`.
  const std::size_t m = vals.size();
  std::size_t cut = 0;
  double best_gap = 1.0 - vals.back() + vals.front();
  for (std::size_t i = 1; i < m; ++i) {
    const double gap = vals[i] - vals[i - 1];
    if (gap > best_gap) {
      best_gap = gap;
      cut = i;
    }
  }
  std::vector<double> reps;
  double first = 0.0, last = 0.0;
  bool in_cluster = false;
  for (std::size_t j = 0; j < m; ++j) {
    double v = vals[(cut + j) % m];
    if (cut + j >= m) v += 1.0;  // unwrapped past the seam
    if (!in_cluster) {
      first = last = v;
      in_cluster = true;
    } else if (v - first <= resolution) {
      last = v;
    } else {
      reps.push_back(wrap_unit(0.5 * (first + last)));
      first = last = v;
    }
  }
  if (in_cluster) reps.push_back(wrap_unit(0.5 * (first + last)));
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace reeb
