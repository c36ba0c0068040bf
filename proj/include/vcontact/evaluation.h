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

// Detection quality metrics and threshold calibration.

#ifndef VCONTACT_EVALUATION_H_
#define VCONTACT_EVALUATION_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "vcontact/signal.h"

namespace vcontact::eval {

struct Metrics {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// truth holds the records in contact, detected those flagged. Precision of
// an empty detection is 1 if truth is empty too and 0 otherwise; recall of
// an empty truth is 1; F1 is 0 when precision + recall is 0.
Metrics PrecisionRecallF1(const std::set<std::size_t>& truth,
                          const std::set<std::size_t>& detected);
// Element-wise form; both vectors must have equal length.
Metrics PrecisionRecallF1(const std::vector<bool>& truth,
                          const std::vector<bool>& detected);

struct LabeledRecord {
  SignalVector scan;
  bool contact = false;
  double distance = 0;
};

struct LabeledDataset {
  std::vector<LabeledRecord> records;
  ProcessedProfile processed;
  // Raw scans behind processed, used by the scan-to-scan baselines. Empty
  // for area profiles.
  SignalProfile source;
  Seconds lifespan = 0;
};

enum class Method { kVcontact, kJaccard, kAverageManhattan, kAverageEuclidean };

std::string MethodName(Method method);

// Per-record score, larger meaning closer. vContact scores a record by its
// best similarity to a processed segment covering its timestamp (so it is
// flagged at alpha iff score >= alpha). Baselines compare against the raw
// scans that generated those covering segments; Jaccard takes the best
// similarity and the distances are negated. Baselines need a source profile.
std::vector<double> ScoreRecords(const LabeledDataset& data, Method method);

std::vector<bool> Labels(const LabeledDataset& data);

struct CalibrationPoint {
  double alpha = 0;
  Metrics metrics;
};

struct CalibrationCurve {
  std::vector<CalibrationPoint> points;
  double intersection_alpha = 0;
  std::size_t intersection_index = 0;

  const CalibrationPoint& intersection() const {
    return points[intersection_index];
  }
};

// 0.01, 0.02, ..., 1.00.
std::vector<double> DefaultAlphaGrid(double step = 0.01);

// Flags every record whose score is >= each threshold. The intersection is
// the threshold minimizing |precision - recall| among thresholds with at
// least one correct detection (all thresholds if there is none); ties go to
// the smaller threshold. Throws InvalidInputError for an empty or unsorted
// grid or mismatched spans.
CalibrationCurve SweepScores(std::span<const double> scores,
                             const std::vector<bool>& truth,
                             std::span<const double> thresholds);

// SweepScores over vContact scores. Grid values must lie in (0, 1].
CalibrationCurve SweepThreshold(const LabeledDataset& data,
                                std::span<const double> alpha_grid);

// Sorted distinct scores: every threshold that changes the flagged set.
std::vector<double> CandidateThresholds(std::span<const double> scores);

}  // namespace vcontact::eval

#endif  // VCONTACT_EVALUATION_H_
