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

// Desk-scale reproductions of the proximity, site, in-out and robustness
// experiments on simulated sites. Every study is a pure function of the
// site, the configuration and the seeds.

#ifndef VCONTACT_STUDIES_H_
#define VCONTACT_STUDIES_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vcontact/evaluation.h"
#include "vcontact/presets.h"

namespace vcontact::eval {

struct StudyConfig {
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  // Positions of the second device, meters from the reference device.
  std::vector<double> distances = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  Seconds duration = 600;
  Seconds sampling_period = 5;
  Seconds lifespan = 1800;
  double alpha_step = 0.01;
};

struct ProximityOptions {
  sim::Device reference_device;
  sim::Device other_device;
  // Perturbations of the published reference side.
  double reference_filter_rate = 0;
  double reference_noise_std = 0;
  // Perturbations of each scanning device's own profile.
  double other_filter_rate = 0;
  double other_noise_std = 0;
};

// A reference device stays at the footprint center while one device sits at
// each configured distance along a per-seed bearing; all scan over the same
// period. The reference profile becomes the processed profile. Records are
// left unlabeled.
LabeledDataset MakeProximityDataset(const sim::SitePreset& site,
                                    std::uint64_t seed,
                                    const StudyConfig& config,
                                    const ProximityOptions& options = {});

// Marks records within proximity meters as contacts.
void LabelWithin(LabeledDataset& data, double proximity);

struct StudyRow {
  std::string site;
  std::uint64_t seed = 0;
  double proximity = 0;
  std::string method;
  double threshold = 0;
  Metrics metrics;
};

// Labels data at proximity and evaluates method at its calibrated threshold:
// the alpha grid for vContact, every distinct score for baselines.
StudyRow EvaluateAt(LabeledDataset& data, double proximity, Method method,
                    const StudyConfig& config);

// vContact per proximity and seed.
std::vector<StudyRow> RunProximityStudy(const sim::SitePreset& site,
                                        std::span<const double> proximities,
                                        const StudyConfig& config);

// Every method per proximity and seed on identical datasets.
std::vector<StudyRow> RunMethodComparison(const sim::SitePreset& site,
                                          std::span<const double> proximities,
                                          const StudyConfig& config,
                                          std::span<const Method> methods);

struct InOutResult {
  double precision = 0;
  double recall = 0;
  std::size_t inside = 0;
  std::size_t outside = 0;
};

// Classifies each scan as inside the area when its similarity to a covering
// area segment is >= alpha, and scores the "inside" class.
InOutResult RunInOutStudy(const ProcessedProfile& area,
                          std::span<const SignalVector> inside,
                          std::span<const SignalVector> outside,
                          double alpha = 0.2);

struct InOutOptions {
  Seconds survey_duration = 300;
  Seconds survey_period = 5;
  Seconds lifespan = 1800;
  int test_scans = 200;
  // Outside scans lie between margin and margin + extent meters beyond the
  // footprint.
  double outside_margin = 20;
  double outside_extent = 40;
};

struct InOutScenario {
  ProcessedProfile area;
  std::vector<SignalVector> inside;
  std::vector<SignalVector> outside;
};

// A survey walk over the footprint builds the area profile; test scans are
// taken at random spots inside and outside the footprint during the stay.
InOutScenario MakeInOutScenario(const sim::SitePreset& site,
                                std::uint64_t seed,
                                const InOutOptions& options = {});

struct WalkingOptions {
  double speed = 1.0;
  // Companions walk this many meters behind the reference.
  double separation = 1.0;
  int companions = 4;
  Seconds duration = 1800;
};

// Companions follow the reference's loop around the access point field; all
// scan every sampling_period seconds, each at its own random phase. Returns
// the fraction of companion scans within the reference profile's span that
// are flagged at alpha against its zero-lifespan profile.
double RunWalkingRecall(const sim::SitePreset& site, std::uint64_t seed,
                        Seconds sampling_period, double alpha,
                        const WalkingOptions& options = {});

struct RobustnessKnobs {
  std::vector<double> filter_rates = {0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                      0.6, 0.7, 0.8, 0.9};
  std::vector<double> noise_stds = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<Seconds> sampling_periods = {10, 20, 30, 40, 50, 60, 70, 80};
  bool device_pairs = true;
  double proximity = 2;
};

struct RobustnessRow {
  std::string knob;
  std::string setting;
  std::uint64_t seed = 0;
  double alpha = 0;
  Metrics metrics;
};

struct RobustnessReport {
  std::vector<RobustnessRow> rows;

  std::vector<RobustnessRow> Table(const std::string& knob) const;
};

// One table per knob: AP filtering and RSSI noise on the published side,
// sampling period for a walking group (recall only), and every ordered pair
// of heterogeneous devices. Alpha is recalibrated per setting except in the
// walking table, which uses the unperturbed calibration.
RobustnessReport RunRobustnessSuite(const sim::SitePreset& site,
                                    const StudyConfig& config,
                                    const RobustnessKnobs& knobs);

// CSV with header site,seed,proximity,method,threshold,precision,recall,f1.
std::string StudyCsv(std::span<const StudyRow> rows);
// CSV with header alpha,precision,recall,f1.
std::string CurveCsv(const CalibrationCurve& curve);
// CSV with header knob,setting,seed,alpha,precision,recall,f1.
std::string RobustnessCsv(const RobustnessReport& report);

}  // namespace vcontact::eval

#endif  // VCONTACT_STUDIES_H_
