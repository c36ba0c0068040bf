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

// Similarity between a user's scan and a processed vector, plus the
// scan-to-scan baselines it is compared against.

#ifndef VCONTACT_SIMILARITY_H_
#define VCONTACT_SIMILARITY_H_

#include <optional>

#include "vcontact/signal.h"

namespace vcontact {

// Shared ids over the smaller id count. 0 if either side is empty.
double OverlapRatio(const SignalVector& scan, const ProcessedVector& processed);

// Mean distance of each shared id's reading from its range (0 inside the
// range). nullopt when no id is shared.
std::optional<double> RssiDifference(const SignalVector& scan,
                                     const ProcessedVector& processed);

// O / (D + 1), in [0, 1]. 0 when no id is shared.
double VcontactSimilarity(const SignalVector& scan,
                          const ProcessedVector& processed);

// |a ∩ b| / |a ∪ b|; 0 when both are empty.
double Jaccard(const SignalVector& a, const SignalVector& b);

// Which ids divide the summed distance in AMD/AED.
enum class BaselineDenominator {
  // Every id of a ∪ b (missing readings are filled with the floor).
  kUnion,
  // Only ids read by both scans. Yields +infinity when nothing is shared.
  kSharedOnly,
};

// Average Manhattan / Euclidean RSSI distance, filling ids missing from one
// side with kWeakSignalFloor. Throw InvalidInputError if both are empty.
double AverageManhattanDistance(
    const SignalVector& a, const SignalVector& b,
    BaselineDenominator denominator = BaselineDenominator::kUnion);
double AverageEuclideanDistance(
    const SignalVector& a, const SignalVector& b,
    BaselineDenominator denominator = BaselineDenominator::kUnion);

}  // namespace vcontact

#endif  // VCONTACT_SIMILARITY_H_
