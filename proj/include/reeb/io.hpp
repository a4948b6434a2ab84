// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "reeb/annulus.hpp"
#include "reeb/band.hpp"
#include "reeb/circle.hpp"
#include "reeb/examples.hpp"
#include "reeb/profile.hpp"

namespace reeb {

using json = nlohmann::json;

//! {"family": ..., "f0": ..., "depth": ..., "beta": (example2),
//!  "nodes": [[y, f], ...] (custom)}
json profile_to_json(const Profile& p);
Profile profile_from_json(const json& j);

//! {"nodes": [[u, v], ...]} — one period of the lift.
json plhomeo_to_json(const PLHomeo& g);
PLHomeo plhomeo_from_json(const json& j);

json sigma_to_json(const SigmaValue& s);
json rigidity_to_json(const RigidityReport& r);

//! Standard verification report: {"check", "residual", "worst_sample",
//! "pass"}.
json report_json(const std::string& check, double residual,
                 json worst_sample, bool pass);

//! Rows "y,f,fstar": all profile nodes merged with `samples` points
//! uniform in the depth coordinate, descending y.
std::string profile_csv(const Profile& p, int samples);

//! Rows "t,chart,x,y".
std::string orbit_csv(const std::vector<OrbitSample>& orbit);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace reeb
