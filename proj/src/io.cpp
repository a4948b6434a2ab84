// SPDX-License-Identifier: Apache-2.0

#include "reeb/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace reeb {

namespace {

std::string g17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

json profile_to_json(const Profile& p) {
  json j;
  switch (p.family()) {
    case Profile::Family::kMonotone:
      j["family"] = "monotone";
      break;
    case Profile::Family::kExample1:
      j["family"] = "example1";
      break;
    case Profile::Family::kExample2:
      j["family"] = "example2";
      j["beta"] = p.beta();
      break;
    case Profile::Family::kCustom: {
      j["family"] = "custom";
      json nodes = json::array();
      for (std::size_t i = 0; i < p.us().size(); ++i)
        nodes.push_back({Profile::y_of_u(p.us()[i]), p.fs()[i]});
      j["nodes"] = std::move(nodes);
      break;
    }
  }
  j["f0"] = p.f0();
  j["depth"] = p.depth();
  return j;
}

Profile profile_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  const double f0 = j.value("f0", 0.0);
  const int depth = j.value("depth", 16);
  if (family == "monotone") return Profile::monotone(depth, f0);
  if (family == "example1") return Profile::example1(depth, f0);
  if (family == "example2")
    return Profile::example2(j.at("beta").get<double>(), depth, f0);
  if (family == "custom") {
    std::vector<std::array<double, 2>> nodes;
    for (const auto& row : j.at("nodes")) {
      if (!row.is_array() || row.size() != 2)
        throw std::invalid_argument("profile nodes must be [y, f] pairs");
      nodes.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return Profile::custom(std::move(nodes));
  }
  throw std::invalid_argument("unknown profile family: " + family);
}

json plhomeo_to_json(const PLHomeo& g) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.us().size(); ++i)
    nodes.push_back({g.us()[i], g.vs()[i]});
  return json{{"nodes", std::move(nodes)}};
}

PLHomeo plhomeo_from_json(const json& j) {
  std::vector<double> us, vs;
  for (const auto& row : j.at("nodes")) {
    if (!row.is_array() || row.size() != 2)
      throw std::invalid_argument("lift nodes must be [u, v] pairs");
    us.push_back(row[0].get<double>());
    vs.push_back(row[1].get<double>());
  }
  return PLHomeo(std::move(us), std::move(vs));
}

json sigma_to_json(const SigmaValue& s) {
  json j;
  if (s.is_infinite)
    j["value"] = "infinity";
  else
    j["value"] = s.value;
  j["is_estimate"] = s.is_estimate;
  if (s.is_estimate) {
    j["lo"] = s.lo;
    j["hi"] = s.hi;
  }
  return j;
}

json rigidity_to_json(const RigidityReport& r) {
  json j;
  j["constraints"] = r.constraints;
  j["max_gap"] = r.max_gap;
  j["alpha_clusters"] = r.alpha_clusters;
  j["verdict"] = r.verdict;
  if (r.alpha) j["alpha"] = *r.alpha;
  j["n"] = r.n;
  j["resolution"] = r.resolution;
  return j;
}

json report_json(const std::string& check, double residual, json worst_sample,
                 bool pass) {
  json j;
  j["check"] = check;
  j["residual"] = residual;
  j["worst_sample"] = std::move(worst_sample);
  j["pass"] = pass;
  return j;
}

std::string profile_csv(const Profile& p, int samples) {
  if (samples < 2) throw std::invalid_argument("need samples >= 2");
  std::vector<double> us = p.us();
  for (int i = 0; i < samples; ++i)
    us.push_back(p.u_max() * double(i) / double(samples - 1));
  std::sort(us.begin(), us.end());
  us.erase(std::unique(us.begin(), us.end(),
                       [](double a, double b) { return b - a < 1e-12; }),
           us.end());
  std::string out = "y,f,fstar\n";
  for (double u : us) {
    const double y = Profile::y_of_u(u);
    out += g17(y);
    out += ',';
    out += g17(p.f(y));
    out += ',';
    out += g17(p.fstar(y));
    out += '\n';
  }
  return out;
}

std::string orbit_csv(const std::vector<OrbitSample>& orbit) {
  std::string out = "t,chart,x,y\n";
  for (const OrbitSample& s : orbit) {
    out += g17(s.t);
    out += ',';
    out += std::to_string(s.pt.chart);
    out += ',';
    out += g17(s.pt.x);
    out += ',';
    out += g17(s.pt.y);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace reeb
