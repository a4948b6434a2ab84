// SPDX-License-Identifier: Apache-2.0

#include "reeb/io.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"

using namespace reeb;

namespace {

//! Temp-file path unique to this test binary run.
std::string temp_path(const char* stem) {
  return std::string("reeb_io_test_") + stem + ".tmp";
}

}  // namespace

TEST_CASE("profile JSON round-trips every family with exact nodes") {
  const Profile profiles[] = {
      Profile::monotone(12, 0.25), Profile::example1(9, -1.5),
      Profile::example2(0.7548776662466927, 11, 0.0),
      Profile::custom({{{1.0, 0.5}}, {{0.5, 1.25}}, {{0.125, 0.75}}})};
  for (const Profile& p : profiles) {
    const Profile q = profile_from_json(profile_to_json(p));
    CHECK(q.family() == p.family());
    CHECK(q.f0() == p.f0());
    CHECK(q.depth() == p.depth());
    CHECK(q.beta() == p.beta());
    CHECK(q.us() == p.us());
    CHECK(q.fs() == p.fs());
  }
}

TEST_CASE("profile JSON rejects malformed input") {
  CHECK_THROWS_AS(profile_from_json(json{{"family", "exotic"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      profile_from_json(json{{"family", "custom"}, {"nodes", {1.0, 2.0}}}),
      std::invalid_argument);
  // example2 without beta
  CHECK_THROWS_AS(profile_from_json(json{{"family", "example2"}}),
                  json::exception);
}

TEST_CASE("lift JSON round-trips bitwise") {
  std::mt19937_64 rng(41);
  const PLHomeo g = random_pl_homeo(rng, 7, 0.3);
  const PLHomeo h = plhomeo_from_json(plhomeo_to_json(g));
  CHECK(h.us() == g.us());
  CHECK(h.vs() == g.vs());
  CHECK_THROWS_AS(plhomeo_from_json(json{{"nodes", {0.0, 1.0}}}),
                  std::invalid_argument);
}

TEST_CASE("sigma serialization distinguishes the three outcomes") {
  SigmaValue finite;
  finite.value = 1.0;
  const json jf = sigma_to_json(finite);
  CHECK(jf["value"] == 1.0);
  CHECK(jf["is_estimate"] == false);
  CHECK(!jf.contains("lo"));

  SigmaValue inf;
  inf.is_infinite = true;
  CHECK(sigma_to_json(inf)["value"] == "infinity");

  SigmaValue est;
  est.value = 1.5;
  est.is_estimate = true;
  est.lo = 1.0;
  est.hi = 2.0;
  const json je = sigma_to_json(est);
  CHECK(je["is_estimate"] == true);
  CHECK(je["lo"] == 1.0);
  CHECK(je["hi"] == 2.0);
}

TEST_CASE("rigidity serialization carries the whole report") {
  const RigidityReport rep =
      rigidity_report(Profile::example1(8), 8, 0.01);
  const json j = rigidity_to_json(rep);
  CHECK(j["verdict"] == kVerdictConjugatePair);
  CHECK(j["alpha"] == 0.0);
  CHECK(j["n"] == 8);
  CHECK(j["resolution"] == 0.01);
  CHECK(j["constraints"].size() == rep.constraints.size());
  CHECK(j["alpha_clusters"].size() == rep.alpha_clusters.size());
  CHECK(j.contains("max_gap"));
}

TEST_CASE("verification reports expose the standard fields") {
  const json j = report_json("group-law", 3.5e-10, json{{"t", 0.5}}, true);
  CHECK(j["check"] == "group-law");
  CHECK(j["residual"] == 3.5e-10);
  CHECK(j["pass"] == true);
  CHECK(j["worst_sample"]["t"] == 0.5);
}

TEST_CASE("profile CSV is a descending-depth table with node rows") {
  const Profile p = Profile::example1(4);
  const std::string csv = profile_csv(p, 16);
  CHECK(csv.rfind("y,f,fstar\n", 0) == 0);

  // parse back and check shape
  std::vector<double> ys;
  std::size_t pos = csv.find('\n') + 1;
  while (pos < csv.size()) {
    const std::size_t eol = csv.find('\n', pos);
    const std::string line = csv.substr(pos, eol - pos);
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = line.find(',', c1 + 1);
    REQUIRE(c1 != std::string::npos);
    REQUIRE(c2 != std::string::npos);
    const double y = std::stod(line.substr(0, c1));
    const double f = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double fs = std::stod(line.substr(c2 + 1));
    CHECK(f == p.f(y));
    CHECK(fs == p.fstar(y));
    ys.push_back(y);
    pos = eol + 1;
  }
  CHECK(ys.front() == 1.0);
  CHECK(ys.back() == p.y_min());
  for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] < ys[i - 1]);
  // every profile node appears
  CHECK(ys.size() >= p.us().size());

  CHECK_THROWS_AS(profile_csv(p, 1), std::invalid_argument);
}

TEST_CASE("orbit CSV lists one row per sample") {
  const BandFlow fl(Profile::example1(6));
  const auto orbit = sample_orbit(fl, BandPoint{0, 0.0, 0.5}, 2.0, 8);
  const std::string csv = orbit_csv(orbit);
  CHECK(csv.rfind("t,chart,x,y\n", 0) == 0);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == orbit.size() + 1);  // header + samples
  CHECK(orbit.size() == 9);
}

TEST_CASE("file round-trip and missing-file error") {
  const std::string path = temp_path("roundtrip");
  const std::string payload = "alpha,beta\n0.5,1.25\n";
  write_file(path, payload);
  CHECK(read_file(path) == payload);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file(path), std::runtime_error);
}

TEST_CASE("seventeen significant digits survive a text round-trip") {
  const Profile p = Profile::example2(0.61803398874989484, 6);
  const std::string csv = profile_csv(p, 4);
  // the deepest node value appears verbatim at full precision
  const double want = p.f(p.y_min());
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", want);
  CHECK(csv.find(buf) != std::string::npos);
  CHECK(std::stod(buf) == want);
}
