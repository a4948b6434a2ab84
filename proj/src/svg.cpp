// SPDX-License-Identifier: Apache-2.0

#include "reeb/svg.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace reeb {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8g", x);
  return buf;
}

}  // namespace

SvgCanvas::SvgCanvas(double px_w, double px_h, double x_lo, double x_hi,
                     double y_lo, double y_hi)
    : w_(px_w), h_(px_h), x_lo_(x_lo), x_hi_(x_hi), y_lo_(y_lo), y_hi_(y_hi) {
  if (!(x_hi > x_lo) || !(y_hi > y_lo))
    throw std::invalid_argument("svg canvas needs a nonempty data rectangle");
}

double SvgCanvas::map_x(double x) const {
  return (x - x_lo_) / (x_hi_ - x_lo_) * w_;
}

double SvgCanvas::map_y(double y) const {
  return h_ - (y - y_lo_) / (y_hi_ - y_lo_) * h_;
}

void SvgCanvas::polyline(const std::vector<std::array<double, 2>>& pts,
                         const std::string& stroke, double width) {
  if (pts.size() < 2) return;
  body_ += "<polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
           num(width) + "\" points=\"";
  for (const auto& [x, y] : pts)
    body_ += num(map_x(x)) + "," + num(map_y(y)) + " ";
  body_ += "\"/>\n";
}

void SvgCanvas::line(double x0, double y0, double x1, double y1,
                     const std::string& stroke, double width) {
  body_ += "<line x1=\"" + num(map_x(x0)) + "\" y1=\"" + num(map_y(y0)) +
           "\" x2=\"" + num(map_x(x1)) + "\" y2=\"" + num(map_y(y1)) +
           "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) +
           "\"/>\n";
}

void SvgCanvas::circle(double cx, double cy, double px_radius,
                       const std::string& fill) {
  body_ += "<circle cx=\"" + num(map_x(cx)) + "\" cy=\"" + num(map_y(cy)) +
           "\" r=\"" + num(px_radius) + "\" fill=\"" + fill + "\"/>\n";
}

void SvgCanvas::text(double x, double y, const std::string& s, int px_size) {
  body_ += "<text x=\"" + num(map_x(x)) + "\" y=\"" + num(map_y(y)) +
           "\" font-size=\"" + std::to_string(px_size) +
           "\" font-family=\"sans-serif\">" + s + "</text>\n";
}

std::string SvgCanvas::str() const {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w_) +
         "\" height=\"" + num(h_) + "\" viewBox=\"0 0 " + num(w_) + " " +
         num(h_) + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
         body_ + "</svg>\n";
}

std::string foliation_svg(const Profile& p, int leaves, int samples,
                          int marked) {
  if (leaves < 1 || samples < 2)
    throw std::invalid_argument("need leaves >= 1 and samples >= 2");
  const double umax = p.u_max();
  SvgCanvas c(640, 480, 0.0, 1.0, 0.0, umax);

  // level curves x = f(y) + k/leaves mod 1, drawn against depth u;
  // split the polyline wherever the angle wraps around
  for (int k = 0; k < leaves; ++k) {
    const double base = double(k) / double(leaves);
    std::vector<std::array<double, 2>> run;
    double prev = -1.0;
    for (int i = 0; i < samples; ++i) {
      const double u = umax * double(i) / double(samples - 1);
      const double x = wrap_unit(p.f(Profile::y_of_u(u)) + base);
      if (!run.empty() && std::fabs(x - prev) > 0.5) {
        c.polyline(run, "#3366aa", 0.8);
        run.clear();
      }
      run.push_back({x, u});
      prev = x;
    }
    c.polyline(run, "#3366aa", 0.8);
  }

  if (marked > 0) {
    const SigmaValue s = p.sigma();
    if (s.is_infinite || s.value > 0.0) {
      try {
        OscillationSeq seq = extract_osc_seq(p, marked);
        for (const OscPair& pr : seq.pairs) {
          const double u = Profile::u_of_y(pr.y);
          c.line(0.0, u, 1.0, u, "#aa3333", 1.2);
          c.text(0.015, u + 0.2, "f = " + num(pr.f_y));
        }
      } catch (const std::invalid_argument&) {
        // window too shallow for the requested marks; plot without them
      }
    }
  }
  c.text(0.35, umax - 0.3, "angle vs depth u = log2(1/y)");
  return c.str();
}

std::string band_svg(const BandFlow& fl, const std::vector<OrbitSample>& orbit,
                     int leaves) {
  if (leaves < 2) throw std::invalid_argument("need leaves >= 2");
  const double y_min = fl.profile().y_min();
  // charts side by side: chart 0 on [0, 4], chart 1 shifted to [5, 9]
  SvgCanvas c(720, 360, -0.5, 9.5, -0.1, 1.1);
  for (int chart = 0; chart < 2; ++chart) {
    const double x0 = chart * 5.0;
    for (int i = 0; i < leaves; ++i) {
      const double y = y_min + (1.0 - y_min) * double(i) / double(leaves - 1);
      c.line(x0, y, x0 + 4.0, y, "#888888", 0.6);
    }
    c.line(x0 + 2.0, y_min, x0 + 2.0, 1.0, "#33aa55", 1.2);  // x = 0
    c.text(x0 + 0.1, 1.05, chart == 0 ? "chart 0" : "chart 1");
  }
  std::vector<std::array<double, 2>> run;
  for (const OrbitSample& s : orbit) {
    // place x periodically inside the 4-unit window of its chart
    const double xv = s.pt.chart * 5.0 + 2.0 + std::fmod(s.pt.x + 2.0, 4.0) - 2.0;
    run.push_back({xv, s.pt.y});
  }
  c.polyline(run, "#aa3333", 1.4);
  return c.str();
}

}  // namespace reeb
