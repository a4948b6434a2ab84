// SPDX-License-Identifier: Apache-2.0
//
// reebflow: profiles, band flows, annulus actions, and their verification
// sweeps from the command line. Exit 0 = checks pass, 2 = an invariant
// check failed (report still emitted), 1 = usage or I/O problem.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "reeb/annulus.hpp"
#include "reeb/band.hpp"
#include "reeb/circle.hpp"
#include "reeb/errors.hpp"
#include "reeb/examples.hpp"
#include "reeb/io.hpp"
#include "reeb/profile.hpp"
#include "reeb/svg.hpp"

namespace {

using reeb::json;

constexpr double kGoldenBeta = 0.61803398874989484;

struct ProfileOpts {
  std::string family = "example1";
  double beta = kGoldenBeta;
  int depth = 16;
  double f0 = 0.0;
  std::string json_path;
};

void add_profile_flags(CLI::App* cmd, ProfileOpts& po) {
  cmd->add_option("--family", po.family, "monotone|example1|example2|custom")
      ->check(CLI::IsMember({"monotone", "example1", "example2", "custom"}));
  cmd->add_option("--beta", po.beta, "slope parameter for example2");
  cmd->add_option("--depth", po.depth, "number of oscillation pairs")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--f0", po.f0, "anchor value f(1)");
  cmd->add_option("--profile-json", po.json_path,
                  "load the profile from a JSON file instead");
}

reeb::Profile make_profile(const ProfileOpts& po) {
  if (!po.json_path.empty())
    return reeb::profile_from_json(json::parse(reeb::read_file(po.json_path)));
  if (po.family == "monotone") return reeb::Profile::monotone(po.depth, po.f0);
  if (po.family == "example1") return reeb::Profile::example1(po.depth, po.f0);
  if (po.family == "example2") {
    if (auto pq = reeb::near_rational(po.beta))
      std::cerr << "warning: beta is within 1e-12 of " << pq->first << "/"
                << pq->second << "; the constraint set will not be dense\n";
    return reeb::Profile::example2(po.beta, po.depth, po.f0);
  }
  throw CLI::ValidationError("--family custom requires --profile-json");
}

reeb::CircleAction make_psi(std::uint64_t seed, const std::string& psi_json,
                            bool rotation) {
  if (!psi_json.empty())
    return reeb::CircleAction(
        reeb::plhomeo_from_json(json::parse(reeb::read_file(psi_json))));
  if (rotation) return reeb::CircleAction::rotation();
  std::mt19937_64 rng(seed);
  return reeb::CircleAction(reeb::random_pl_homeo(rng, 6, 0.2));
}

int emit(json j, const std::string& out, std::uint64_t seed, int code) {
  j["seed"] = seed;
  const std::string text = j.dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    reeb::write_file(out, text);
  return code;
}

double annulus_dist(const reeb::AnnulusPoint& a, const reeb::AnnulusPoint& b) {
  if (a.is_interior != b.is_interior) return 1.0;
  const double dx = reeb::circle_dist(a.x, b.x);
  return std::max(dx, a.is_interior ? std::fabs(a.y - b.y) : 0.0);
}

int run_profile(const ProfileOpts& po, int samples, const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const std::string csv = reeb::profile_csv(p, samples < 2 ? 256 : samples);
  if (out.empty())
    std::cout << csv;
  else
    reeb::write_file(out, csv);
  const reeb::SigmaValue s = p.sigma();
  if (s.is_infinite)
    std::cout << "sigma = infinity\n";
  else if (s.is_estimate)
    std::cout << "sigma = " << s.value << " (estimate in [" << s.lo << ", "
              << s.hi << "])\n";
  else
    std::cout << "sigma = " << s.value << "\n";
  return 0;
}

int run_realize(const ProfileOpts& po, double x0, double y0, double t_max,
                int steps, const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const reeb::BandFlow fl = reeb::realize_flow(p);
  const auto orbit =
      reeb::sample_orbit(fl, reeb::BandPoint{0, x0, y0}, t_max, steps);
  const std::string base = out.empty() ? std::string("orbit") : out;
  reeb::write_file(base + ".csv", reeb::orbit_csv(orbit));
  reeb::write_file(base + ".svg", reeb::band_svg(fl, orbit, 9));
  std::cout << "wrote " << base << ".csv and " << base << ".svg\n";
  return 0;
}

int run_verify_pi(const ProfileOpts& po, int samples, std::uint64_t seed,
                  double tol, const std::string& out) {
  const reeb::Profile p = make_profile(po);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  json worst_sample;
  for (int i = 0; i < samples; ++i) {
    const double u = unit(rng) * p.u_max();
    const double y = reeb::Profile::y_of_u(u);
    const double x = unit(rng);
    const auto pr =
        reeb::projections(reeb::AnnulusPoint::interior(x, y), p);
    const double gap = reeb::wrap_unit(*pr.pi0 - *pr.pi1);
    const double want = reeb::wrap_unit(p.f(y));
    const double d = reeb::circle_dist(gap, want);
    if (d >= worst) {
      worst = d;
      worst_sample = {{"x", x}, {"y", y}, {"gap", gap}, {"f", want}};
    }
  }
  const bool pass = worst <= tol;
  return emit(reeb::report_json("pi-identity", worst, worst_sample, pass), out,
              seed, pass ? 0 : 2);
}

int run_verify_group(const ProfileOpts& po, int samples, std::uint64_t seed,
                     double tol, const std::string& psi_json, bool rotation,
                     const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const reeb::CircleAction psi = make_psi(seed, psi_json, rotation);
  const reeb::AnnulusAction a = reeb::build_example1_action(psi, p);
  std::mt19937_64 rng(seed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  json worst_sample;
  for (int i = 0; i < samples; ++i) {
    const double s = unit(rng), t = unit(rng);
    const double x = unit(rng);
    const double y = reeb::Profile::y_of_u(unit(rng) * p.u_max());
    const auto xi = reeb::AnnulusPoint::interior(x, y);
    const double d =
        annulus_dist(a.act(s, a.act(t, xi)), a.act(s + t, xi));
    if (d >= worst) {
      worst = d;
      worst_sample = {{"s", s}, {"t", t}, {"x", x}, {"y", y}};
    }
  }
  const bool pass = worst <= tol;
  return emit(reeb::report_json("group-law", worst, worst_sample, pass), out,
              seed, pass ? 0 : 2);
}

int run_verify_commutation(const ProfileOpts& po, int samples,
                           std::uint64_t seed, double tol, double alpha,
                           bool mismatch, const std::string& psi_json,
                           const std::string& out) {
  const reeb::Profile p = make_profile(po);
  reeb::CommutationReport rep;
  if (mismatch) {
    // negative control: independently seeded boundary actions
    const auto a = reeb::AnnulusAction::custom_pair(
        p, make_psi(seed, "", false), make_psi(seed + 1, "", false));
    rep = reeb::verify_commutation(a, alpha, samples);
  } else {
    const auto a =
        reeb::build_example1_action(make_psi(seed, psi_json, false), p);
    rep = reeb::verify_commutation(a, alpha, samples);
  }
  const bool pass = rep.residual <= tol;
  json worst = {{"t", rep.worst_t}, {"x", rep.worst_x}, {"alpha", rep.alpha}};
  return emit(reeb::report_json("commutation", rep.residual, worst, pass), out,
              seed, pass ? 0 : 2);
}

int run_verify_horizontal(const ProfileOpts& po, std::uint64_t seed,
                          double tol, double y_level, double step,
                          const std::string& psi_json, const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const auto a = reeb::build_example1_action(make_psi(seed, psi_json, false), p);
  double y = y_level;
  if (!(y > 0.0)) y = reeb::extract_osc_seq(p, 1).pairs.front().y;
  double worst = 0.0;
  json worst_sample;
  bool pass = true;
  try {
    const auto pts = reeb::find_horizontal_points(a, y, step);
    for (double x : pts) {
      const auto im = a.act(step, reeb::AnnulusPoint::interior(x, y));
      const double res = std::fabs(im.y - y);
      const double dv = std::fabs(reeb::delta(a, reeb::AnnulusPoint::interior(x, y), step));
      const double d = std::max(res, dv);
      if (d >= worst) {
        worst = d;
        worst_sample = {{"x", x}, {"y", y}, {"p_residual", res}, {"delta", dv}};
      }
    }
    pass = worst <= tol && !pts.empty();
    worst_sample["count"] = pts.size();
  } catch (const reeb::HorizontalPointsNotFound& e) {
    pass = false;
    worst = e.min_residual();
    worst_sample = {{"error", e.what()}};
  }
  return emit(reeb::report_json("horizontal-points", worst, worst_sample, pass),
              out, seed, pass ? 0 : 2);
}

int run_example1(const ProfileOpts& po, int samples, std::uint64_t seed,
                 double tol, const std::string& psi_json,
                 const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const reeb::CircleAction psi = make_psi(seed, psi_json, false);
  try {
    const auto a = reeb::build_example1_action(psi, p);
    const double b0 = reeb::boundary_extension_residual(a, 0, p.y_min(), 64);
    const double b1 = reeb::boundary_extension_residual(a, 1, p.y_min(), 64);
    const auto comm = reeb::verify_commutation(a, 0.0, samples);
    const double worst = std::max({b0, b1, comm.residual});
    const bool pass = worst <= tol;
    json ws = {{"boundary0", b0},
               {"boundary1", b1},
               {"commutation", comm.residual}};
    return emit(reeb::report_json("example1-build", worst, ws, pass), out, seed,
                pass ? 0 : 2);
  } catch (const reeb::GlueConstraintViolation& e) {
    json ws = {{"constraint", e.constraint()},
               {"offending", e.offending_values()},
               {"error", e.what()}};
    return emit(reeb::report_json("example1-build", 1.0, ws, false), out, seed,
                2);
  }
}

int run_rigidity(const ProfileOpts& po, int n, double resolution,
                 std::uint64_t seed, const std::string& out) {
  const reeb::Profile p = make_profile(po);
  const reeb::RigidityReport rep =
      reeb::rigidity_report(p, n > 0 ? n : p.depth(), resolution);
  std::cout << "verdict: " << rep.verdict << " (max gap " << rep.max_gap
            << ")\n";
  return emit(reeb::rigidity_to_json(rep), out, seed, 0);
}

int run_extend(bool reparam, bool broken, std::uint64_t seed, double tol,
               const std::string& out) {
  using reeb::HalfLineAction;
  HalfLineAction psi0 = HalfLineAction::model(HalfLineAction::Model::kExpanding);
  HalfLineAction psi1 =
      HalfLineAction::model(HalfLineAction::Model::kContracting);
  if (reparam) {
    std::mt19937_64 rng(seed);
    psi0 = HalfLineAction::periodic(HalfLineAction::Model::kExpanding,
                                    reeb::random_pl_homeo(rng, 4, 0.15));
    psi1 = HalfLineAction::periodic(HalfLineAction::Model::kContracting,
                                    reeb::random_pl_homeo(rng, 4, 0.15));
  }
  if (broken) {
    // conjugator that does not commute with w -> w + 1
    psi0 = HalfLineAction::conjugated(
        HalfLineAction::Model::kExpanding,
        reeb::PiecewiseLinear({0.0, 1.0, 2.0}, {0.0, 1.3, 2.0}));
  }
  try {
    const reeb::ProductFlow flow = reeb::build_standard_extension(psi0, psi1);
    double worst = 0.0;
    json worst_sample;
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 512; ++i) {
      const double x = 8.0 * unit(rng), y = 8.0 * unit(rng);
      const auto t1 = flow.time_one(x, y);
      const double d =
          std::max(std::fabs(t1[0] - 2.0 * x), std::fabs(t1[1] - 0.5 * y));
      const double s = unit(rng), t = unit(rng);
      const auto ab = flow.act(s, flow.act(t, x, y)[0], flow.act(t, x, y)[1]);
      const auto c = flow.act(s + t, x, y);
      const double dg =
          std::max(std::fabs(ab[0] - c[0]), std::fabs(ab[1] - c[1]));
      if (std::max(d, dg) >= worst) {
        worst = std::max(d, dg);
        worst_sample = {{"x", x}, {"y", y}, {"time_one", d}, {"group", dg}};
      }
    }
    const bool pass = worst <= tol;
    return emit(reeb::report_json("extend-standard", worst, worst_sample, pass),
                out, seed, pass ? 0 : 2);
  } catch (const reeb::TimeOneMismatch& e) {
    json ws = {{"sample", e.sample()},
               {"got", e.got()},
               {"want", e.want()},
               {"error", e.what()}};
    return emit(reeb::report_json("extend-standard", 1.0, ws, false), out, seed,
                2);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transit-time profiles, band flows, and annulus actions"};
  app.require_subcommand(1);

  ProfileOpts po;
  int samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double resolution = 0.01;
  std::string out, psi_json;

  // profile
  auto* c_profile = app.add_subcommand("profile", "emit y,f,fstar CSV + sigma");
  add_profile_flags(c_profile, po);
  c_profile->add_option("--samples", samples, "CSV sample count");
  c_profile->add_option("--out", out, "CSV output path");

  // realize
  double x0 = 0.0, y0 = 0.5, t_max = 4.0;
  int steps = 256;
  auto* c_realize =
      app.add_subcommand("realize", "band flow: orbit CSV + SVG plot");
  add_profile_flags(c_realize, po);
  c_realize->add_option("--x0", x0, "orbit start x");
  c_realize->add_option("--y0", y0, "orbit start y");
  c_realize->add_option("--t-max", t_max, "orbit duration");
  c_realize->add_option("--steps", steps, "orbit sample count");
  c_realize->add_option("--out", out, "output base path");

  // verify <what>
  auto* c_verify = app.add_subcommand("verify", "invariant sweeps");
  c_verify->require_subcommand(1);
  double alpha = 0.0, y_level = 0.0, step = 0.5;
  bool mismatch = false, rotation = false;

  auto* v_pi = c_verify->add_subcommand("pi-identity",
                                        "projection identity on samples");
  add_profile_flags(v_pi, po);
  v_pi->add_option("--samples", samples);
  v_pi->add_option("--seed", seed);
  v_pi->add_option("--tol", tol);
  v_pi->add_option("--out", out);

  auto* v_group =
      c_verify->add_subcommand("group-law", "glued action composition law");
  add_profile_flags(v_group, po);
  v_group->add_option("--samples", samples);
  v_group->add_option("--seed", seed);
  v_group->add_option("--tol", tol);
  v_group->add_option("--psi-json", psi_json, "conjugator lift JSON");
  v_group->add_flag("--rotation", rotation, "use the rotation action");
  v_group->add_option("--out", out);

  auto* v_comm = c_verify->add_subcommand(
      "commutation", "R_alpha conjugation of the boundary pair");
  add_profile_flags(v_comm, po);
  v_comm->add_option("--samples", samples);
  v_comm->add_option("--seed", seed);
  v_comm->add_option("--tol", tol);
  v_comm->add_option("--alpha", alpha, "rotation to conjugate by");
  v_comm->add_flag("--mismatch", mismatch,
                   "negative control: independent boundary actions");
  v_comm->add_option("--psi-json", psi_json);
  v_comm->add_option("--out", out);

  auto* v_horiz = c_verify->add_subcommand("horizontal-points",
                                           "p-level roots of the half-turn");
  add_profile_flags(v_horiz, po);
  v_horiz->add_option("--seed", seed);
  v_horiz->add_option("--tol", tol);
  v_horiz->add_option("--y", y_level, "depth level (default: first y_n)");
  v_horiz->add_option("--step", step, "flow time");
  v_horiz->add_option("--psi-json", psi_json);
  v_horiz->add_option("--out", out);

  // example1
  auto* c_ex1 = app.add_subcommand(
      "example1", "build the glued action and verify its boundaries");
  add_profile_flags(c_ex1, po);
  c_ex1->add_option("--samples", samples);
  c_ex1->add_option("--seed", seed);
  c_ex1->add_option("--tol", tol);
  c_ex1->add_option("--psi-json", psi_json);
  c_ex1->add_option("--out", out);

  // rigidity
  int n_pairs = 0;
  auto* c_rig = app.add_subcommand("rigidity", "boundary constraint analysis");
  add_profile_flags(c_rig, po);
  c_rig->add_option("--n", n_pairs, "oscillation pairs (default: depth)");
  c_rig->add_option("--resolution", resolution);
  c_rig->add_option("--out", out);

  // extend-standard
  bool reparam = false, broken = false;
  auto* c_ext = app.add_subcommand("extend-standard",
                                   "product flow over the model quadrant");
  c_ext->add_flag("--reparam", reparam, "reparametrized half-line actions");
  c_ext->add_flag("--break", broken, "inject a non-commuting conjugator");
  c_ext->add_option("--seed", seed);
  c_ext->add_option("--tol", tol);
  c_ext->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage message
    return code == 0 ? 0 : 1;
  }

  try {
    if (*c_profile) return run_profile(po, samples, out);
    if (*c_realize) return run_realize(po, x0, y0, t_max, steps, out);
    if (*v_pi) return run_verify_pi(po, samples, seed, tol, out);
    if (*v_group)
      return run_verify_group(po, samples, seed, tol, psi_json, rotation, out);
    if (*v_comm)
      return run_verify_commutation(po, samples, seed, tol, alpha, mismatch,
                                    psi_json, out);
    if (*v_horiz)
      return run_verify_horizontal(po, seed, tol, y_level, step, psi_json, out);
    if (*c_ex1) return run_example1(po, samples, seed, tol, psi_json, out);
    if (*c_rig) return run_rigidity(po, n_pairs, resolution, seed, out);
    if (*c_ext) return run_extend(reparam, broken, seed, tol, out);
  } catch (const json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
