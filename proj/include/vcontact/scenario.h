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

// Scenario files: INI text naming a site preset, overrides and the
// parameters of each study. Every key is optional except site; unknown
// sections and keys are rejected so typos do not silently fall back to
// defaults.
//
//   [environment]   site, layout_seed, path_loss_exponent, shadowing_std,
//                   detection_floor
//   [study]         seeds, distances, proximities, duration, sampling_period,
//                   lifespan, alpha_step, methods, calibrate_proximity
//   [inout]         alpha, test_scans, survey_duration, survey_period,
//                   lifespan, outside_margin, outside_extent
//   [robustness]    filter_rates, noise_stds, sampling_periods, device_pairs,
//                   proximity
//   [trajectory.N]  waypoints ("t:x:y" items), sampling_period, stream,
//                   bias_db, detect_rate
//
// Lists are separated by spaces or commas.

#ifndef VCONTACT_SCENARIO_H_
#define VCONTACT_SCENARIO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vcontact/errors.h"
#include "vcontact/studies.h"

namespace vcontact::eval {

// A scenario file is unreadable or invalid. key names "section.key".
class ConfigError : public InvalidInputError {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : InvalidInputError(key.empty() ? message : key + ": " + message),
        key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct TrajectorySpec {
  std::string name;
  sim::Trajectory trajectory;
  Seconds sampling_period = 5;
  std::uint64_t stream = 1;
};

struct Scenario {
  sim::SitePreset site;
  StudyConfig study;
  std::vector<double> proximities = {1, 2, 3, 4, 5};
  std::vector<Method> methods = {Method::kVcontact};
  double calibrate_proximity = 2;
  InOutOptions inout;
  double inout_alpha = 0.2;
  RobustnessKnobs robustness;
  std::vector<TrajectorySpec> trajectories;
};

Scenario ParseScenario(std::string_view ini_text);
Scenario LoadScenario(const std::filesystem::path& path);

// Inverse of MethodName. Throws ConfigError for unknown names.
Method ParseMethod(std::string_view name);

}  // namespace vcontact::eval

#endif  // VCONTACT_SCENARIO_H_
