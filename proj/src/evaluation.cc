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

#include "vcontact/evaluation.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vcontact/detection.h"
#include "vcontact/errors.h"
#include "vcontact/processing.h"
#include "vcontact/similarity.h"

namespace vcontact::eval {
namespace {

Metrics FromCounts(std::size_t truth, std::size_t detected,
                   std::size_t correct) {
  Metrics m;
  if (detected == 0) {
    m.precision = truth == 0 ? 1.0 : 0.0;
  } else {
    m.precision = static_cast<double>(correct) / static_cast<double>(detected);
  }
  m.recall = truth == 0 ? 1.0
                        : static_cast<double>(correct) /
                              static_cast<double>(truth);
  const double sum = m.precision + m.recall;
  m.f1 = sum == 0 ? 0.0 : 2.0 * m.precision * m.recall / sum;
  return m;
}

double BaselineScore(Method method, const SignalVector& a,
                     const SignalVector& b) {
  switch (method) {
    case Method::kJaccard:
      return Jaccard(a, b);
    case Method::kAverageManhattan:
      if (a.empty() && b.empty()) return 0.0;
      return -AverageManhattanDistance(a, b);
    case Method::kAverageEuclidean:
      if (a.empty() && b.empty()) return 0.0;
      return -AverageEuclideanDistance(a, b);
    case Method::kVcontact:
      break;
  }
  throw InvalidInputError("not a baseline method");
}

}  // namespace

Metrics PrecisionRecallF1(const std::set<std::size_t>& truth,
                          const std::set<std::size_t>& detected) {
  std::size_t correct = 0;
  for (std::size_t i : detected) correct += truth.count(i);
  return FromCounts(truth.size(), detected.size(), correct);
}

Metrics PrecisionRecallF1(const std::vector<bool>& truth,
                          const std::vector<bool>& detected) {
  if (truth.size() != detected.size()) {
    throw InvalidInputError("truth and detection sizes differ");
  }
  std::size_t t = 0, d = 0, c = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    t += truth[i];
    d += detected[i];
    c += truth[i] && detected[i];
  }
  return FromCounts(t, d, c);
}

std::string MethodName(Method method) {
  switch (method) {
    case Method::kVcontact:
      return "vcontact";
    case Method::kJaccard:
      return "jaccard";
    case Method::kAverageManhattan:
      return "amd";
    case Method::kAverageEuclidean:
      return "aed";
  }
  return "unknown";
}

std::vector<double> ScoreRecords(const LabeledDataset& data, Method method) {
  std::vector<double> scores;
  scores.reserve(data.records.size());
  if (method == Method::kVcontact) {
    for (const LabeledRecord& r : data.records) {
      scores.push_back(BestCoveringScore(r.scan, std::span(&data.processed, 1)));
    }
    return scores;
  }

  if (data.source.size() < 2) {
    throw InvalidInputError("baseline scoring needs the raw source profile");
  }
  std::vector<std::size_t> pair_index;
  const ProcessedProfile rebuilt =
      BuildCaseProfile(data.source, LifespanSchedule(data.lifespan), {}, {},
                       &pair_index);
  const std::vector<SignalVector>& raw = data.source.vectors();
  for (const LabeledRecord& r : data.records) {
    const Timestamp t = r.scan.timestamp();
    std::vector<bool> candidate(raw.size(), false);
    for (std::size_t s = 0; s < rebuilt.size(); ++s) {
      if (rebuilt.segments()[s].Covers(t)) {
        candidate[pair_index[s]] = true;
        candidate[pair_index[s] + 1] = true;
      }
    }
    double best = -std::numeric_limits<double>::infinity();
    bool any = false;
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (!candidate[j]) continue;
      best = std::max(best, BaselineScore(method, r.scan, raw[j]));
      any = true;
    }
    scores.push_back(any ? best : -std::numeric_limits<double>::infinity());
  }
  return scores;
}

std::vector<bool> Labels(const LabeledDataset& data) {
  std::vector<bool> labels;
  labels.reserve(data.records.size());
  for (const LabeledRecord& r : data.records) labels.push_back(r.contact);
  return labels;
}

std::vector<double> DefaultAlphaGrid(double step) {
  if (!(step > 0 && step <= 1)) {
    throw InvalidInputError("alpha step must lie in (0, 1]");
  }
  std::vector<double> grid;
  const auto count = static_cast<int>(std::llround(1.0 / step));
  for (int i = 1; i <= count; ++i) {
    grid.push_back(std::min(1.0, static_cast<double>(i) * step));
  }
  return grid;
}

CalibrationCurve SweepScores(std::span<const double> scores,
                             const std::vector<bool>& truth,
                             std::span<const double> thresholds) {
  if (thresholds.empty()) throw InvalidInputError("empty threshold grid");
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw InvalidInputError("threshold grid must be ascending");
  }
  if (scores.size() != truth.size()) {
    throw InvalidInputError("score and label counts differ");
  }
  const std::size_t positives =
      static_cast<std::size_t>(std::count(truth.begin(), truth.end(), true));

  // Sort records by score once; each threshold then splits the order.
  std::vector<std::size_t> order(scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });

  CalibrationCurve curve;
  std::size_t flagged = 0;
  std::size_t correct = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  bool best_has_hits = false;
  // Walk thresholds from high to low so the flagged prefix only grows.
  std::vector<CalibrationPoint> points(thresholds.size());
  for (std::size_t k = thresholds.size(); k-- > 0;) {
    while (flagged < order.size() && scores[order[flagged]] >= thresholds[k]) {
      correct += truth[order[flagged]];
      ++flagged;
    }
    points[k] = {thresholds[k], FromCounts(positives, flagged, correct)};
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Metrics& m = points[k].metrics;
    const bool has_hits = m.f1 > 0;
    const double gap = std::fabs(m.precision - m.recall);
    if ((has_hits && !best_has_hits) ||
        (has_hits == best_has_hits && gap < best_gap)) {
      best_gap = gap;
      best_has_hits = has_hits;
      curve.intersection_index = k;
    }
  }
  curve.points = std::move(points);
  curve.intersection_alpha = curve.points[curve.intersection_index].alpha;
  return curve;
}

CalibrationCurve SweepThreshold(const LabeledDataset& data,
                                std::span<const double> alpha_grid) {
  for (double a : alpha_grid) {
    if (!(a > 0 && a <= 1)) {
      throw InvalidInputError("alpha grid values must lie in (0, 1]");
    }
  }
  const std::vector<double> scores = ScoreRecords(data, Method::kVcontact);
  return SweepScores(scores, Labels(data), alpha_grid);
}

std::vector<double> CandidateThresholds(std::span<const double> scores) {
  std::vector<double> out(scores.begin(), scores.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vcontact::eval
