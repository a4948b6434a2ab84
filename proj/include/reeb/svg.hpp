// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

#include "reeb/band.hpp"
#include "reeb/profile.hpp"

namespace reeb {

//! Tiny SVG writer: fixed pixel canvas, data-space rectangle mapped onto
//! it with y growing upward. Enough for the documentation plots; no
//! numeric contract beyond the plotted coordinates.
class SvgCanvas {
 public:
  SvgCanvas(double px_w, double px_h, double x_lo, double x_hi, double y_lo,
            double y_hi);

  void polyline(const std::vector<std::array<double, 2>>& pts,
                const std::string& stroke, double width = 1.0);
  void line(double x0, double y0, double x1, double y1,
            const std::string& stroke, double width = 1.0);
  void circle(double cx, double cy, double px_radius,
              const std::string& fill);
  void text(double x, double y, const std::string& s, int px_size = 11);

  std::string str() const;

 private:
  double map_x(double x) const;
  double map_y(double y) const;

  double w_, h_, x_lo_, x_hi_, y_lo_, y_hi_;
  std::string body_;
};

//! The glued foliation of the annulus in (angle, depth) coordinates:
//! `leaves` level curves x = f(y) + c mod 1, with the invariant circles
//! of the first `marked` oscillation pairs drawn as horizontal rules.
std::string foliation_svg(const Profile& p, int leaves, int samples,
                          int marked);

//! The two-chart band with a few horizontal leaves, the x = 0
//! transversals, and one sampled orbit polyline.
std::string band_svg(const BandFlow& fl, const std::vector<OrbitSample>& orbit,
                     int leaves);

}  // namespace reeb
