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

#ifndef VCONTACT_PRESETS_H_
#define VCONTACT_PRESETS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vcontact/simulator.h"

namespace vcontact::sim {

// A simulated measurement site: access points scattered over a surrounding
// region, and the footprint where devices are placed.
struct SitePreset {
  std::string name;
  Environment env;
  // Measurement footprint [0, width] x [0, height].
  double width = 0;
  double height = 0;
  // Published mean number of APs per scan the detection floor is tuned for.
  double target_mean_aps = 0;
};

// Presets "office" (32 APs), "bus-station" (109 APs) and "mall" (301 APs).
// layout_seed fixes AP placement; env.seed (initially equal) keys the noise.
// Throws InvalidInputError for unknown names.
SitePreset MakeSitePreset(std::string_view name,
                          std::uint64_t layout_seed = 1);

std::vector<std::string> SitePresetNames();

// Five phones whose detect rates follow the relative per-scan AP counts of
// the heterogeneous handsets measured co-located in a mall (75.00, 128.12,
// 180.16, 92.87, 102.09 APs on average).
std::vector<Device> HeterogeneousDevices();

// Mean number of reported APs per scan, estimated from samples scans at
// positions spread over the footprint.
double MeanApCount(const SitePreset& site, int samples = 200);

}  // namespace vcontact::sim

#endif  // VCONTACT_PRESETS_H_
