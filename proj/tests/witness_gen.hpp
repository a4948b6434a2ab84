// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>
#include <vector>

#include "reeb/profile.hpp"

namespace testing {

//! Random strictly increasing PL reparametrization with h(0) = 0 and
//! h(1) in [0.6, 1]: slopes stay within about a factor of three of each
//! other so the transformed profile keeps a usable window.
inline reeb::WitnessH random_witness_h(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> inc(0.5, 1.5);
  std::uniform_real_distribution<double> top(0.6, 1.0);
  const int m = 4;
  std::vector<double> dx(m), dv(m);
  double sx = 0.0, sv = 0.0;
  for (int i = 0; i < m; ++i) {
    sx += (dx[i] = inc(rng));
    sv += (dv[i] = inc(rng));
  }
  const double h1 = top(rng);
  std::vector<std::array<double, 2>> nodes{{0.0, 0.0}};
  double x = 0.0, v = 0.0;
  for (int i = 0; i < m; ++i) {
    x += dx[i] / sx;
    v += dv[i] / sv * h1;
    nodes.push_back({i + 1 == m ? 1.0 : x, i + 1 == m ? h1 : v});
  }
  return reeb::WitnessH(std::move(nodes));
}

//! Random continuous PL perturbation on [0, 1] with values in [-2, 2];
//! slopes stay of order ten, so near the window tail (y below ~1e-6) its
//! contribution to the oscillation is far below the 1e-6 gate.
inline reeb::WitnessK random_witness_k(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> val(-2.0, 2.0);
  std::vector<std::array<double, 2>> nodes;
  const int m = 5;
  for (int i = 0; i <= m; ++i)
    nodes.push_back({double(i) / m, val(rng)});
  return reeb::WitnessK(std::move(nodes));
}

}  // namespace testing
