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

#include "vcontact/presets.h"

#include <cstdio>

#include "vcontact/counter_rng.h"
#include "vcontact/errors.h"

namespace vcontact::sim {
namespace {

constexpr std::string_view kMacSalt = "vcontact-sim";

struct PresetParams {
  std::string_view name;
  int ap_count;
  double width;
  double height;
  // APs are spread over the footprint grown by this margin on every side.
  double margin;
  double path_loss_exponent;
  double shadowing_std;
  double detection_floor;
  double target_mean_aps;
};

constexpr PresetParams kPresets[] = {
    {"office", 32, 10, 12, 10, 3.0, 3.0, -71, 19.02},
    {"bus-station", 109, 2, 15, 27, 2.8, 3.5, -70, 24.0},
    {"mall", 301, 20, 25, 30, 3.0, 3.0, -74, 46.29},
};

SignalId SimulatedApId(std::uint64_t site, int index) {
  char mac[18];
  std::snprintf(mac, sizeof(mac), "02:%02X:%02X:%02X:%02X:%02X",
                static_cast<unsigned>(site & 0xff),
                static_cast<unsigned>((site >> 8) & 0xff),
                static_cast<unsigned>((site >> 16) & 0xff), (index >> 8) & 0xff,
                index & 0xff);
  return HashMac(mac, kMacSalt);
}

}  // namespace

std::vector<std::string> SitePresetNames() {
  std::vector<std::string> names;
  for (const PresetParams& p : kPresets) names.emplace_back(p.name);
  return names;
}

SitePreset MakeSitePreset(std::string_view name, std::uint64_t layout_seed) {
  for (const PresetParams& p : kPresets) {
    if (p.name != name) continue;
    SitePreset site;
    site.name = std::string(name);
    site.width = p.width;
    site.height = p.height;
    site.target_mean_aps = p.target_mean_aps;
    site.env.path_loss_exponent = p.path_loss_exponent;
    site.env.shadowing_std = p.shadowing_std;
    site.env.detection_floor = p.detection_floor;
    site.env.seed = layout_seed;
    const CounterRng rng(layout_seed ^ 0x5eed5eedULL);
    const std::uint64_t site_word = static_cast<std::uint64_t>(
        &p - kPresets) * 0x10000 + layout_seed;
    for (int i = 0; i < p.ap_count; ++i) {
      const auto k = static_cast<std::uint64_t>(i);
      AccessPoint ap;
      ap.id = SimulatedApId(site_word, i);
      ap.position = {-p.margin + rng.Uniform({k, 0}) * (p.width + 2 * p.margin),
                     -p.margin + rng.Uniform({k, 1}) * (p.height + 2 * p.margin)};
      ap.tx_power = -45.0 + 15.0 * rng.Uniform({k, 2});
      site.env.aps.push_back(ap);
    }
    return site;
  }
  throw InvalidInputError("unknown site preset '" + std::string(name) + "'");
}

std::vector<Device> HeterogeneousDevices() {
  constexpr double kCounts[] = {75.00, 128.12, 180.16, 92.87, 102.09};
  constexpr double kBias[] = {-2.0, 1.0, 0.0, -1.0, 2.0};
  std::vector<Device> devices;
  for (int i = 0; i < 5; ++i) {
    devices.push_back({kBias[i], kCounts[i] / 180.16});
  }
  return devices;
}

double MeanApCount(const SitePreset& site, int samples) {
  const CounterRng rng(site.env.seed ^ 0xc0ffeeULL);
  double total = 0;
  for (int i = 0; i < samples; ++i) {
    const auto k = static_cast<std::uint64_t>(i);
    const Point p{rng.Uniform({k, 0}) * site.width,
                  rng.Uniform({k, 1}) * site.height};
    total += static_cast<double>(
        SampleScan(site.env, p, Device{}, {0xfeedULL, k}, 0).size());
  }
  return total / samples;
}

}  // namespace vcontact::sim
