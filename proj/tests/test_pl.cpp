// SPDX-License-Identifier: Apache-2.0

#include "reeb/pl.hpp"

#include <stdexcept>

#include "doctest.h"

using reeb::PiecewiseLinear;

TEST_CASE("piecewise linear evaluation is exact at nodes") {
  PiecewiseLinear f({0.0, 1.0, 3.0}, {2.0, -1.0, 5.0});
  CHECK(f(0.0) == 2.0);
  CHECK(f(1.0) == -1.0);
  CHECK(f(3.0) == 5.0);
  CHECK(f(2.0) == doctest::Approx(2.0));  // midpoint of (-1, 5)
}

TEST_CASE("nodes given out of order are sorted") {
  PiecewiseLinear f({3.0, 0.0, 1.0}, {5.0, 2.0, -1.0});
  CHECK(f(1.0) == -1.0);
  CHECK(f(0.5) == doctest::Approx(0.5));
}

TEST_CASE("linear extension continues the edge slopes") {
  PiecewiseLinear f({0.0, 1.0}, {0.0, 2.0});
  CHECK(f(2.0) == doctest::Approx(4.0));
  CHECK(f(-1.0) == doctest::Approx(-2.0));
}

TEST_CASE("constant extension clamps to the edge values") {
  PiecewiseLinear f({0.0, 1.0}, {0.0, 2.0},
                    PiecewiseLinear::Extend::Constant);
  CHECK(f(5.0) == 2.0);
  CHECK(f(-5.0) == 0.0);
}

TEST_CASE("inverse round-trips on strictly increasing data") {
  PiecewiseLinear f({0.0, 0.25, 1.0}, {-1.0, 0.5, 3.0});
  REQUIRE(f.strictly_increasing());
  for (double x : {0.0, 0.1, 0.25, 0.7, 1.0})
    CHECK(f.inverse(f(x)) == doctest::Approx(x).epsilon(1e-12));
  CHECK(f.inverse(0.5) == 0.25);  // node, exact
}

TEST_CASE("inverse refuses non-monotone data") {
  PiecewiseLinear f({0.0, 1.0, 2.0}, {0.0, 2.0, 1.0});
  CHECK_FALSE(f.strictly_increasing());
  CHECK_THROWS_AS(f.inverse(0.5), std::logic_error);
}

TEST_CASE("construction validates node data") {
  CHECK_THROWS_AS(PiecewiseLinear({0.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PiecewiseLinear({0.0, 1.0}, {1.0}), std::invalid_argument);
  // duplicates collapse; a single distinct abscissa cannot make a segment
  CHECK_THROWS_AS(PiecewiseLinear({1.0, 1.0}, {0.0, 0.0}),
                  std::invalid_argument);
}
