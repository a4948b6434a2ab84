// SPDX-License-Identifier: Apache-2.0

#include "reeb/examples.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reeb/errors.hpp"

using namespace reeb;

namespace {

constexpr double kGolden = 0.61803398874989484;

CircleAction seeded_action(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return CircleAction(random_pl_homeo(rng, 6, 0.2));
}

double annulus_dist(const AnnulusPoint& a, const AnnulusPoint& b) {
  return std::max(circle_dist(a.x, b.x), std::fabs(a.y - b.y));
}

}  // namespace

TEST_CASE("glue blocks tile the window with shared integer endpoints") {
  const Profile p = Profile::example1(4);
  const auto blocks = extract_glue_blocks(p);
  // one block up to the first peak, then three per oscillation pair except
  // the last pair's unsplit tail: down, up-to-crossing, up-to-peak
  CHECK(blocks.size() == 2 + 3 * std::size_t(p.depth() - 1));
  CHECK(blocks.front().us.front() == 0.0);
  CHECK(blocks.back().us.back() == p.u_max());
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    CHECK(blocks[i].us.back() == blocks[i + 1].us.front());
    CHECK(blocks[i].fs.back() == blocks[i + 1].fs.front());
  }
  for (const GlueBlock& b : blocks) {
    CHECK(b.y_lo < b.y_hi);
    CHECK(b.f_lo == std::round(b.f_lo));
    CHECK(b.f_hi == std::round(b.f_hi));
    // each block covers exactly one unit of f-range
    CHECK(std::fabs(b.f_hi - b.f_lo) == 1.0);
    CHECK(b.increasing_in_y == (b.fs.back() < b.fs.front()));
    for (std::size_t k = 0; k + 1 < b.fs.size(); ++k) {
      CHECK(b.us[k] < b.us[k + 1]);
      CHECK((b.fs[k + 1] - b.fs[k]) * (b.fs.back() - b.fs.front()) > 0.0);
    }
  }
}

TEST_CASE("ascending runs split where they cross an integer level") {
  // the climb from f = 0 at u = 2 to f = 2 at u = 3 crosses 1 at u = 2.5
  const auto blocks = extract_glue_blocks(Profile::example1(2));
  REQUIRE(blocks.size() == 5);
  CHECK(blocks[2].us.front() == 2.0);
  CHECK(blocks[2].us.back() == 2.5);
  CHECK(blocks[2].fs.front() == 0.0);
  CHECK(blocks[2].fs.back() == 1.0);
  CHECK(blocks[3].us.front() == 2.5);
  CHECK(blocks[3].us.back() == 3.0);
  CHECK(blocks[3].fs.back() == 2.0);
}

TEST_CASE("flat profile segments admit no monotone tiling") {
  const Profile flat =
      Profile::custom({{{1.0, 0.0}}, {{0.5, 0.0}}, {{0.25, 1.0}}});
  CHECK_THROWS_AS(extract_glue_blocks(flat), std::invalid_argument);
}

TEST_CASE("glue translation fixes integers and grows with the f-value") {
  const CircleAction psi = seeded_action(7);
  for (double tau : {0.2, 0.5, 0.9})
    for (double x : {0.0, 0.33, 0.8}) {
      for (double m : {-1.0, 0.0, 3.0})
        CHECK(glue_delta(psi, tau, x, m) == m);
      double prev = glue_delta(psi, tau, x, 2.0);
      for (int k = 1; k <= 16; ++k) {
        const double fy = 2.0 + double(k) / 16.0;
        const double cur = glue_delta(psi, tau, x, fy);
        CHECK(cur > prev);   // strictly increasing
        CHECK(cur > 2.0);    // stays inside the unit block
        CHECK(cur <= 3.0);
        prev = cur;
      }
    }
}

TEST_CASE("gluing with a rotation degenerates to the horizontal rotation") {
  const Profile p = Profile::example1(8);
  const AnnulusAction glued =
      build_example1_action(CircleAction::rotation(), p);
  const AnnulusAction horiz = AnnulusAction::horizontal_rotation(p);
  for (double t : {0.25, 0.37, 0.5})
    for (double x : {0.0, 0.61})
      for (double u : {0.4, 1.0, 2.7, 5.5}) {
        const AnnulusPoint xi = AnnulusPoint::interior(x, Profile::y_of_u(u));
        CHECK(annulus_dist(glued.act(t, xi), horiz.act(t, xi)) <= 1e-12);
      }
  CHECK(std::fabs(delta(glued, AnnulusPoint::interior(0.3, 0.4), 0.5)) <=
        1e-12);
}

TEST_CASE("glued action keeps the boundary pair equal to psi") {
  const CircleAction psi = seeded_action(11);
  const AnnulusAction a = build_example1_action(psi, Profile::example1(8));
  CHECK(a.kind() == AnnulusAction::Kind::kGlued);
  for (int side : {0, 1}) {
    const auto& g = a.boundary_action(side).conjugator();
    CHECK(g.us() == psi.conjugator().us());
    CHECK(g.vs() == psi.conjugator().vs());
  }
}

TEST_CASE("glued action satisfies the group law") {
  const AnnulusAction a = build_example1_action(seeded_action(12),
                                                Profile::example1(10));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double t = unit(rng), s = unit(rng);
    const AnnulusPoint xi = AnnulusPoint::interior(
        unit(rng), Profile::y_of_u(unit(rng) * a.profile().u_max()));
    const AnnulusPoint both = a.act(t + s, xi);
    const AnnulusPoint chained = a.act(t, a.act(s, xi));
    CHECK(annulus_dist(both, chained) <= 1e-9);
  }
}

TEST_CASE("profiles with fractional block endpoints are rejected") {
  const CircleAction psi = seeded_action(13);
  const Profile p2 = Profile::example2(kGolden, 8);
  CHECK_THROWS_AS(build_example1_action(psi, p2), GlueConstraintViolation);
  try {
    build_example1_action(psi, p2);
  } catch (const GlueConstraintViolation& e) {
    CHECK(e.constraint() == kGolden);  // f(y_1) mod 1, the first offender
    CHECK(!e.offending_values().empty());
    for (double v : e.offending_values())
      CHECK(std::fabs(v - std::round(v)) > 1e-9);
    // the violated constraint is a rotation psi genuinely fails to commute
    // with, so the rejection is not an artifact of the block bookkeeping
    CHECK_FALSE(commutes_with_rotation(psi, CirclePoint(e.constraint()), 1e-9));
  }
  // the structural precondition binds regardless of psi
  CHECK_THROWS_AS(build_example1_action(CircleAction::rotation(), p2),
                  GlueConstraintViolation);
}

TEST_CASE("glue constraint sets of the built-in families") {
  const auto c1 = glue_constraints(Profile::example1(8), 6);
  REQUIRE(c1.size() == 1);
  CHECK(c1.front() == 0.0);

  const Profile p2 = Profile::example2(kGolden, 8);
  const auto c2 = glue_constraints(p2, 3);
  REQUIRE(c2.size() == 3);  // n*beta and n*beta - 1 coincide mod 1
  for (int n = 1; n <= 3; ++n) {
    const double want = wrap_unit(double(n) * kGolden);
    CHECK(std::count(c2.begin(), c2.end(), want) == 1);
    CHECK(wrap_unit(double(n) * kGolden - 1.0) == want);
  }
  CHECK(std::is_sorted(c2.begin(), c2.end()));

  CHECK(glue_constraints(Profile::monotone(8), 5).empty());
}

TEST_CASE("accepted actions commute with every glue constraint") {
  // example1's only constraint is the trivial rotation, which any circle
  // action commutes with -- consistent with the build accepting any psi
  const CircleAction psi = seeded_action(17);
  for (double c : glue_constraints(Profile::example1(8), 8))
    CHECK(commutes_with_rotation(psi, CirclePoint(c), 1e-12));
}

TEST_CASE("dense constraints force both boundary actions to rotations") {
  const Profile p = Profile::example2(kGolden, 1000);
  const RigidityReport rep = rigidity_report(p, 1000, 0.01);
  CHECK(rep.verdict == kVerdictForced);
  CHECK(rep.constraints.size() == 1000);
  CHECK(rep.max_gap < 0.01);
  // largest circular gap of {n*beta mod 1 : n <= 1000}, frozen from an
  // exact-rational evaluation at this beta
  CHECK(std::fabs(rep.max_gap - 0.0011862412896636032) <= 1e-12);
  CHECK(rep.n == 1000);
  CHECK(rep.resolution == 0.01);
  CHECK_FALSE(rep.alpha.has_value());
}

TEST_CASE("a hundred golden constraints are not yet dense at 0.01") {
  const RigidityReport rep =
      rigidity_report(Profile::example2(kGolden, 200), 100, 0.01);
  CHECK(rep.verdict == kVerdictInconclusive);
  CHECK(rep.max_gap > 0.01);
  CHECK(rep.alpha_clusters.size() > 1);
}

TEST_CASE("integer oscillation steps yield the conjugate-pair verdict") {
  const RigidityReport rep = rigidity_report(Profile::example1(16), 16, 0.01);
  CHECK(rep.verdict == kVerdictConjugatePair);
  REQUIRE(rep.alpha.has_value());
  CHECK(*rep.alpha == 0.0);
  CHECK(rep.alpha_clusters.size() == 1);
  CHECK(rep.max_gap == 1.0);  // a single constraint point has no gaps to close
}

TEST_CASE("standard profiles carry no rigidity constraints") {
  CHECK_THROWS_AS(rigidity_report(Profile::monotone(8), 8, 0.01),
                  std::invalid_argument);
  CHECK_THROWS_AS(rigidity_report(Profile::example1(8), 8, 0.0),
                  std::invalid_argument);
}

TEST_CASE("nearby fractions are detected, genuine irrationals are not") {
  auto half = near_rational(0.5);
  REQUIRE(half.has_value());
  CHECK(half->first == 1);
  CHECK(half->second == 2);

  auto third = near_rational(1.0 / 3.0 + 1e-13);
  REQUIRE(third.has_value());
  CHECK(third->first == 1);
  CHECK(third->second == 3);

  CHECK_FALSE(near_rational(kGolden).has_value());
}
