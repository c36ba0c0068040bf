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

#include "vcontact/studies.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "vcontact/counter_rng.h"
#include "vcontact/detection.h"
#include "vcontact/errors.h"
#include "vcontact/processing.h"

namespace vcontact::eval {
namespace {

constexpr std::uint64_t kReferenceStream = 1000;
constexpr Timestamp kStudyStart = 1'600'000'000;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double Bearing(std::uint64_t seed) {
  return CounterRng(seed).Uniform({0xbea7}) * 2 * std::numbers::pi;
}

sim::Point Center(const sim::SitePreset& site) {
  return {site.width / 2, site.height / 2};
}

struct Box {
  double x0, y0, x1, y1;
};

Box Footprint(const sim::SitePreset& site) {
  return {0, 0, site.width, site.height};
}

// Bounding box of the access points, shrunk by a fifth on every side.
Box ApField(const sim::SitePreset& site) {
  Box box = Footprint(site);
  for (const sim::AccessPoint& ap : site.env.aps) {
    box.x0 = std::min(box.x0, ap.position.x);
    box.y0 = std::min(box.y0, ap.position.y);
    box.x1 = std::max(box.x1, ap.position.x);
    box.y1 = std::max(box.y1, ap.position.y);
  }
  const double dx = (box.x1 - box.x0) / 5;
  const double dy = (box.y1 - box.y0) / 5;
  return {box.x0 + dx, box.y0 + dy, box.x1 - dx, box.y1 - dy};
}

// Repeated loops around a rectangle inset from box's edges.
std::vector<sim::Waypoint> PerimeterWalk(const Box& box, Timestamp start,
                                         Seconds duration, double speed) {
  const double inset_x = std::min(1.0, (box.x1 - box.x0) / 4);
  const double inset_y = std::min(1.0, (box.y1 - box.y0) / 4);
  const std::vector<sim::Point> corners = {
      {box.x0 + inset_x, box.y0 + inset_y},
      {box.x1 - inset_x, box.y0 + inset_y},
      {box.x1 - inset_x, box.y1 - inset_y},
      {box.x0 + inset_x, box.y1 - inset_y}};
  std::vector<sim::Waypoint> walk = {{start, corners[0]}};
  double travelled = 0;
  for (std::size_t i = 1;; ++i) {
    const sim::Point& from = corners[(i - 1) % corners.size()];
    const sim::Point& to = corners[i % corners.size()];
    travelled += sim::Distance(from, to);
    const auto t = start + static_cast<Timestamp>(std::lround(travelled / speed));
    if (t > walk.back().time) walk.push_back({t, to});
    if (t >= start + duration) break;
  }
  return walk;
}

}  // namespace

LabeledDataset MakeProximityDataset(const sim::SitePreset& site,
                                    std::uint64_t seed,
                                    const StudyConfig& config,
                                    const ProximityOptions& options) {
  if (config.distances.empty()) {
    throw InvalidInputError("proximity study needs at least one distance");
  }
  sim::Environment env = site.env;
  env.seed = seed;
  sim::PairedScenarioOptions paired;
  paired.anchor = Center(site);
  paired.bearing = Bearing(seed);
  paired.start = kStudyStart;
  paired.duration = config.duration;
  paired.sampling_period = config.sampling_period;
  paired.reference_device = options.reference_device;
  paired.other_device = options.other_device;
  paired.reference_stream = kReferenceStream;

  LabeledDataset data;
  data.lifespan = config.lifespan;
  for (std::size_t i = 0; i < config.distances.size(); ++i) {
    paired.other_stream = i + 1;
    sim::PairedScenario scenario =
        sim::MakePairedScenario(env, config.distances[i], paired);
    if (i == 0) {
      SignalProfile reference = std::move(scenario.reference);
      if (options.reference_filter_rate > 0) {
        reference = sim::FilterAccessPoints(
            reference, options.reference_filter_rate, seed ^ 0xf11e);
      }
      if (options.reference_noise_std > 0) {
        reference = sim::AddRssiNoise(reference, options.reference_noise_std,
                                      seed ^ 0x9015e);
      }
      data.processed = BuildCaseProfile(reference,
                                        LifespanSchedule(config.lifespan),
                                        site.name);
      data.source = std::move(reference);
    }
    if (options.other_filter_rate > 0) {
      scenario.other = sim::FilterAccessPoints(
          scenario.other, options.other_filter_rate, seed ^ (0xf11e0 + i));
    }
    if (options.other_noise_std > 0) {
      scenario.other = sim::AddRssiNoise(scenario.other, options.other_noise_std,
                                         seed ^ (0x9015e0 + i));
    }
    for (const SignalVector& scan : scenario.other.vectors()) {
      data.records.push_back({scan, false, config.distances[i]});
    }
  }
  return data;
}

void LabelWithin(LabeledDataset& data, double proximity) {
  for (LabeledRecord& record : data.records) {
    record.contact = record.distance <= proximity;
  }
}

StudyRow EvaluateAt(LabeledDataset& data, double proximity, Method method,
                    const StudyConfig& config) {
  LabelWithin(data, proximity);
  const std::vector<double> scores = ScoreRecords(data, method);
  const std::vector<double> thresholds =
      method == Method::kVcontact ? DefaultAlphaGrid(config.alpha_step)
                                  : CandidateThresholds(scores);
  const CalibrationCurve curve = SweepScores(scores, Labels(data), thresholds);
  StudyRow row;
  row.proximity = proximity;
  row.method = MethodName(method);
  row.threshold = curve.intersection_alpha;
  row.metrics = curve.intersection().metrics;
  return row;
}

std::vector<StudyRow> RunProximityStudy(const sim::SitePreset& site,
                                        std::span<const double> proximities,
                                        const StudyConfig& config) {
  const Method methods[] = {Method::kVcontact};
  return RunMethodComparison(site, proximities, config, methods);
}

std::vector<StudyRow> RunMethodComparison(const sim::SitePreset& site,
                                          std::span<const double> proximities,
                                          const StudyConfig& config,
                                          std::span<const Method> methods) {
  std::vector<StudyRow> rows;
  for (const std::uint64_t seed : config.seeds) {
    LabeledDataset data = MakeProximityDataset(site, seed, config);
    for (const double k : proximities) {
      for (const Method method : methods) {
        StudyRow row = EvaluateAt(data, k, method, config);
        row.site = site.name;
        row.seed = seed;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

InOutResult RunInOutStudy(const ProcessedProfile& area,
                          std::span<const SignalVector> inside,
                          std::span<const SignalVector> outside,
                          double alpha) {
  std::vector<bool> truth;
  std::vector<bool> detected;
  const std::span<const ProcessedProfile> published(&area, 1);
  for (const SignalVector& scan : inside) {
    truth.push_back(true);
    detected.push_back(BestCoveringScore(scan, published) >= alpha);
  }
  for (const SignalVector& scan : outside) {
    truth.push_back(false);
    detected.push_back(BestCoveringScore(scan, published) >= alpha);
  }
  const Metrics m = PrecisionRecallF1(truth, detected);
  return {m.precision, m.recall, inside.size(), outside.size()};
}

InOutScenario MakeInOutScenario(const sim::SitePreset& site,
                                std::uint64_t seed,
                                const InOutOptions& options) {
  if (options.test_scans < 1 || options.survey_duration <= 0) {
    throw InvalidInputError("in-out scenario needs scans and a survey");
  }
  sim::Environment env = site.env;
  env.seed = seed;
  sim::Trajectory survey;
  survey.waypoints =
      PerimeterWalk(Footprint(site), kStudyStart, options.survey_duration, 1.0);
  // Finish the walk through the center so the interior is covered too.
  survey.waypoints.push_back(
      {survey.waypoints.back().time +
           static_cast<Timestamp>(std::lround(sim::Distance(
               survey.waypoints.back().position, Center(site)))) + 1,
       Center(site)});
  const SignalProfile walk =
      sim::SimulateProfile(env, survey, options.survey_period, 1, "survey");
  const Timestamp stay_start = survey.waypoints.back().time + 60;
  const Seconds stay_length = 3600;

  InOutScenario out;
  out.area = BuildAreaProfile(walk, stay_start, stay_start + stay_length,
                              options.lifespan, site.name);
  const CounterRng rng(seed ^ 0x1a0a7);
  const double step = static_cast<double>(stay_length) / options.test_scans;
  for (int i = 0; i < options.test_scans; ++i) {
    const auto t = stay_start + static_cast<Timestamp>(i * step);
    const auto u = static_cast<std::uint64_t>(i);
    const sim::Point in = {rng.Uniform({u, 0}) * site.width,
                           rng.Uniform({u, 1}) * site.height};
    out.inside.push_back(sim::SampleScan(env, in, {}, {2, u}, t));
    // Outside: beyond a random edge of the footprint.
    const double depth =
        options.outside_margin + rng.Uniform({u, 2}) * options.outside_extent;
    const double along = rng.Uniform({u, 3});
    sim::Point away;
    switch (rng.Bits({u, 4}) % 4) {
      case 0: away = {along * site.width, -depth}; break;
      case 1: away = {along * site.width, site.height + depth}; break;
      case 2: away = {-depth, along * site.height}; break;
      default: away = {site.width + depth, along * site.height}; break;
    }
    out.outside.push_back(sim::SampleScan(env, away, {}, {3, u}, t));
  }
  return out;
}

double RunWalkingRecall(const sim::SitePreset& site, std::uint64_t seed,
                        Seconds sampling_period, double alpha,
                        const WalkingOptions& options) {
  if (sampling_period <= 0 || options.speed <= 0 || options.companions < 1) {
    throw InvalidInputError("walking study needs positive period and speed");
  }
  sim::Environment env = site.env;
  env.seed = seed;
  sim::Trajectory reference;
  reference.waypoints =
      PerimeterWalk(ApField(site), kStudyStart, options.duration, options.speed);
  sim::Trajectory companion = reference;
  const auto lag = static_cast<Seconds>(
      std::lround(options.separation / options.speed));
  for (sim::Waypoint& w : companion.waypoints) w.time += lag;

  const SignalProfile published = sim::SimulateProfile(
      env, reference, sampling_period, kReferenceStream, "reference");
  CaseProcessingOptions processing;
  processing.max_gap = std::nullopt;
  const ProcessedProfile profile =
      BuildCaseProfile(published, LifespanSchedule(0), "walk", processing);

  // Only scans inside the span of the published profile can match.
  const Timestamp end = published.vectors().back().timestamp();
  const CounterRng rng(seed);
  const auto period = static_cast<std::uint64_t>(sampling_period);
  std::size_t scans = 0;
  std::size_t flagged = 0;
  for (int c = 0; c < options.companions; ++c) {
    const auto stream = static_cast<std::uint64_t>(c) + 1;
    const auto phase =
        static_cast<Seconds>(rng.Bits({0x9a5e, period, stream}) % period);
    std::uint64_t index = 0;
    for (Timestamp t = kStudyStart + phase; t <= end; t += sampling_period) {
      const SignalVector scan = sim::SampleScan(
          env, companion.PositionAt(t), companion.device, {stream, index++}, t);
      ++scans;
      if (BestCoveringScore(scan, std::span(&profile, 1)) >= alpha) ++flagged;
    }
  }
  return scans == 0 ? 0.0 : static_cast<double>(flagged) / scans;
}

std::vector<RobustnessRow> RobustnessReport::Table(
    const std::string& knob) const {
  std::vector<RobustnessRow> out;
  for (const RobustnessRow& row : rows) {
    if (row.knob == knob) out.push_back(row);
  }
  return out;
}

RobustnessReport RunRobustnessSuite(const sim::SitePreset& site,
                                    const StudyConfig& config,
                                    const RobustnessKnobs& knobs) {
  RobustnessReport report;
  auto run = [&](const std::string& knob, const std::string& setting,
                 std::uint64_t seed, const ProximityOptions& options) {
    LabeledDataset data = MakeProximityDataset(site, seed, config, options);
    const StudyRow row =
        EvaluateAt(data, knobs.proximity, Method::kVcontact, config);
    report.rows.push_back({knob, setting, seed, row.threshold, row.metrics});
    return row.threshold;
  };
  for (const std::uint64_t seed : config.seeds) {
    double base_alpha = 0;
    for (const double rate : knobs.filter_rates) {
      ProximityOptions options;
      options.reference_filter_rate = rate;
      const double alpha = run("filter", Num(rate), seed, options);
      if (rate == 0) base_alpha = alpha;
    }
    for (const double std : knobs.noise_stds) {
      ProximityOptions options;
      options.reference_noise_std = std;
      run("noise", Num(std), seed, options);
    }
    if (!knobs.sampling_periods.empty() && base_alpha == 0) {
      LabeledDataset data = MakeProximityDataset(site, seed, config);
      base_alpha =
          EvaluateAt(data, knobs.proximity, Method::kVcontact, config)
              .threshold;
    }
    for (const Seconds period : knobs.sampling_periods) {
      RobustnessRow row{"sampling", std::to_string(period), seed, base_alpha,
                        {}};
      row.metrics.recall = RunWalkingRecall(site, seed, period, base_alpha);
      report.rows.push_back(row);
    }
    if (knobs.device_pairs) {
      const std::vector<sim::Device> devices = sim::HeterogeneousDevices();
      for (std::size_t a = 0; a < devices.size(); ++a) {
        for (std::size_t b = 0; b < devices.size(); ++b) {
          if (a == b) continue;
          ProximityOptions options;
          options.reference_device = devices[a];
          options.other_device = devices[b];
          run("devices", std::to_string(a + 1) + "-" + std::to_string(b + 1),
              seed, options);
        }
      }
    }
  }
  return report;
}

std::string StudyCsv(std::span<const StudyRow> rows) {
  std::ostringstream out;
  out << "site,seed,proximity,method,threshold,precision,recall,f1\n";
  for (const StudyRow& r : rows) {
    out << r.site << ',' << r.seed << ',' << Num(r.proximity) << ','
        << r.method << ',' << Num(r.threshold) << ','
        << Num(r.metrics.precision) << ',' << Num(r.metrics.recall) << ','
        << Num(r.metrics.f1) << '\n';
  }
  return out.str();
}

std::string CurveCsv(const CalibrationCurve& curve) {
  std::ostringstream out;
  out << "alpha,precision,recall,f1\n";
  for (const CalibrationPoint& p : curve.points) {
    out << Num(p.alpha) << ',' << Num(p.metrics.precision) << ','
        << Num(p.metrics.recall) << ',' << Num(p.metrics.f1) << '\n';
  }
  return out.str();
}

std::string RobustnessCsv(const RobustnessReport& report) {
  std::ostringstream out;
  out << "knob,setting,seed,alpha,precision,recall,f1\n";
  for (const RobustnessRow& r : report.rows) {
    out << r.knob << ',' << r.setting << ',' << r.seed << ',' << Num(r.alpha)
        << ',' << Num(r.metrics.precision) << ',' << Num(r.metrics.recall)
        << ',' << Num(r.metrics.f1) << '\n';
  }
  return out.str();
}

}  // namespace vcontact::eval
