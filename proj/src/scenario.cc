// Copyright 2026 The vContact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vcontact/scenario.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vcontact::eval {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& KnownKeys() {
  static const auto* keys = new std::map<std::string, std::set<std::string>>{
      {"environment",
       {"site", "layout_seed", "path_loss_exponent", "shadowing_std",
        "detection_floor"}},
      {"study",
       {"seeds", "distances", "proximities", "duration", "sampling_period",
        "lifespan", "alpha_step", "methods", "calibrate_proximity"}},
      {"inout",
       {"alpha", "test_scans", "survey_duration", "survey_period", "lifespan",
        "outside_margin", "outside_extent"}},
      {"robustness",
       {"filter_rates", "noise_stds", "sampling_periods", "device_pairs",
        "proximity"}},
      {"trajectory",
       {"waypoints", "sampling_period", "stream", "bias_db", "detect_rate"}},
  };
  return *keys;
}

std::vector<std::string> Tokens(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string token; in >> token;) out.push_back(token);
  return out;
}

template <typename T>
T Number(const std::string& key, std::string_view text) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ConfigError(key, "'" + std::string(text) + "' is not a valid number");
  }
  return value;
}

// Typed access to one section that records which keys it has seen.
class Section {
 public:
  Section(const pt::ptree* tree, std::string name)
      : tree_(tree), name_(std::move(name)) {}

  template <typename T>
  void Get(const std::string& key, T& out) const {
    if (const auto text = Raw(key)) out = Number<T>(Key(key), *text);
  }

  void GetString(const std::string& key, std::string& out) const {
    if (const auto text = Raw(key)) out = *text;
  }

  void GetBool(const std::string& key, bool& out) const {
    if (const auto text = Raw(key)) {
      if (*text == "true" || *text == "1") {
        out = true;
      } else if (*text == "false" || *text == "0") {
        out = false;
      } else {
        throw ConfigError(Key(key), "expected true or false");
      }
    }
  }

  template <typename T>
  void GetList(const std::string& key, std::vector<T>& out) const {
    if (const auto text = Raw(key)) {
      out.clear();
      for (const std::string& token : Tokens(*text)) {
        out.push_back(Number<T>(Key(key), token));
      }
    }
  }

  std::optional<std::string> Raw(const std::string& key) const {
    if (tree_ == nullptr) return std::nullopt;
    const auto child = tree_->get_child_optional(pt::ptree::path_type(key, '\0'));
    if (!child) return std::nullopt;
    return child->data();
  }

  std::string Key(const std::string& key) const { return name_ + "." + key; }

 private:
  const pt::ptree* tree_;
  std::string name_;
};

void Require(bool ok, const std::string& key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

TrajectorySpec ParseTrajectory(const Section& s, const std::string& name) {
  TrajectorySpec spec;
  spec.name = name;
  const auto waypoints = s.Raw("waypoints");
  Require(waypoints.has_value(), s.Key("waypoints"), "required");
  for (const std::string& item : Tokens(*waypoints)) {
    const std::size_t a = item.find(':');
    const std::size_t b = item.find(':', a + 1);
    Require(a != std::string::npos && b != std::string::npos,
            s.Key("waypoints"), "expected t:x:y, got '" + item + "'");
    sim::Waypoint w;
    w.time = Number<Timestamp>(s.Key("waypoints"), item.substr(0, a));
    w.position.x = Number<double>(s.Key("waypoints"), item.substr(a + 1, b - a - 1));
    w.position.y = Number<double>(s.Key("waypoints"), item.substr(b + 1));
    spec.trajectory.waypoints.push_back(w);
  }
  s.Get("sampling_period", spec.sampling_period);
  s.Get("stream", spec.stream);
  s.Get("bias_db", spec.trajectory.device.bias_db);
  s.Get("detect_rate", spec.trajectory.device.detect_rate);
  Require(spec.sampling_period > 0, s.Key("sampling_period"), "must be > 0");
  try {
    spec.trajectory.Validate();
  } catch (const InvalidInputError& e) {
    throw ConfigError(s.Key("waypoints"), e.what());
  }
  return spec;
}

}  // namespace

Method ParseMethod(std::string_view name) {
  for (const Method m : {Method::kVcontact, Method::kJaccard,
                         Method::kAverageManhattan, Method::kAverageEuclidean}) {
    if (MethodName(m) == name) return m;
  }
  throw ConfigError("study.methods", "unknown method '" + std::string(name) + "'");
}

Scenario ParseScenario(std::string_view ini_text) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(ini_text)};
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("", "line " + std::to_string(e.line()) + ": " + e.message());
  }

  std::map<std::string, const pt::ptree*> sections;
  for (const auto& [name, child] : tree) {
    const std::string kind = name.rfind("trajectory.", 0) == 0 ? "trajectory" : name;
    const auto known = KnownKeys().find(kind);
    Require(known != KnownKeys().end() && !child.data().size(), name,
            "unknown section");
    for (const auto& [key, value] : child) {
      Require(known->second.count(key) == 1, name + "." + key, "unknown key");
    }
    sections[name] = &child;
  }
  auto section = [&](const std::string& name) {
    const auto it = sections.find(name);
    return Section(it == sections.end() ? nullptr : it->second, name);
  };

  Scenario s;
  const Section env = section("environment");
  std::string site_name;
  env.GetString("site", site_name);
  Require(!site_name.empty(), "environment.site", "required");
  std::uint64_t layout_seed = 1;
  env.Get("layout_seed", layout_seed);
  try {
    s.site = sim::MakeSitePreset(site_name, layout_seed);
  } catch (const InvalidInputError& e) {
    throw ConfigError("environment.site", e.what());
  }
  env.Get("path_loss_exponent", s.site.env.path_loss_exponent);
  env.Get("shadowing_std", s.site.env.shadowing_std);
  env.Get("detection_floor", s.site.env.detection_floor);
  try {
    s.site.env.Validate();
  } catch (const InvalidInputError& e) {
    throw ConfigError("environment", e.what());
  }

  const Section study = section("study");
  study.GetList("seeds", s.study.seeds);
  study.GetList("distances", s.study.distances);
  study.GetList("proximities", s.proximities);
  study.Get("duration", s.study.duration);
  study.Get("sampling_period", s.study.sampling_period);
  study.Get("lifespan", s.study.lifespan);
  study.Get("alpha_step", s.study.alpha_step);
  study.Get("calibrate_proximity", s.calibrate_proximity);
  if (const auto methods = study.Raw("methods")) {
    s.methods.clear();
    for (const std::string& name : Tokens(*methods)) {
      s.methods.push_back(ParseMethod(name));
    }
  }
  Require(!s.study.seeds.empty(), "study.seeds", "needs at least one seed");
  Require(!s.study.distances.empty(), "study.distances",
          "needs at least one distance");
  Require(!s.proximities.empty(), "study.proximities",
          "needs at least one proximity");
  Require(!s.methods.empty(), "study.methods", "needs at least one method");
  Require(s.study.duration > 0, "study.duration", "must be > 0");
  Require(s.study.sampling_period > 0, "study.sampling_period", "must be > 0");
  Require(s.study.lifespan >= 0, "study.lifespan", "must be >= 0");
  Require(s.study.alpha_step > 0 && s.study.alpha_step <= 1,
          "study.alpha_step", "must lie in (0, 1]");

  const Section inout = section("inout");
  inout.Get("alpha", s.inout_alpha);
  inout.Get("test_scans", s.inout.test_scans);
  inout.Get("survey_duration", s.inout.survey_duration);
  inout.Get("survey_period", s.inout.survey_period);
  inout.Get("lifespan", s.inout.lifespan);
  inout.Get("outside_margin", s.inout.outside_margin);
  inout.Get("outside_extent", s.inout.outside_extent);
  Require(s.inout_alpha > 0 && s.inout_alpha <= 1, "inout.alpha",
          "must lie in (0, 1]");
  Require(s.inout.test_scans > 0, "inout.test_scans", "must be > 0");
  Require(s.inout.survey_duration > 0, "inout.survey_duration", "must be > 0");
  Require(s.inout.survey_period > 0, "inout.survey_period", "must be > 0");

  const Section robust = section("robustness");
  robust.GetList("filter_rates", s.robustness.filter_rates);
  robust.GetList("noise_stds", s.robustness.noise_stds);
  robust.GetList("sampling_periods", s.robustness.sampling_periods);
  robust.GetBool("device_pairs", s.robustness.device_pairs);
  robust.Get("proximity", s.robustness.proximity);
  for (const double r : s.robustness.filter_rates) {
    Require(r >= 0 && r <= 1, "robustness.filter_rates", "rates lie in [0, 1]");
  }
  for (const double v : s.robustness.noise_stds) {
    Require(v >= 0, "robustness.noise_stds", "must be >= 0");
  }
  for (const Seconds p : s.robustness.sampling_periods) {
    Require(p > 0, "robustness.sampling_periods", "must be > 0");
  }

  for (const auto& [name, child] : sections) {
    if (name.rfind("trajectory.", 0) != 0) continue;
    const std::string short_name = name.substr(std::string("trajectory.").size());
    Require(!short_name.empty(), name, "trajectory needs a name");
    s.trajectories.push_back(ParseTrajectory(Section(child, name), short_name));
  }
  return s;
}

Scenario LoadScenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseScenario(buffer.str());
}

}  // namespace vcontact::eval
