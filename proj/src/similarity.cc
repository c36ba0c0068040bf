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

#include "vcontact/similarity.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "vcontact/errors.h"

namespace vcontact {
namespace {

// Walks two id-sorted sequences and calls on_shared(a, b) for common ids.
template <typename A, typename B, typename F>
std::size_t ForEachShared(std::span<const A> a, std::span<const B> b,
                          F&& on_shared) {
  std::size_t shared = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->id < ib->id) {
      ++ia;
    } else if (ib->id < ia->id) {
      ++ib;
    } else {
      on_shared(*ia, *ib);
      ++shared;
      ++ia;
      ++ib;
    }
  }
  return shared;
}

double OutOfRange(Rssi s, const RssiRange& range) {
  if (s < range.min) return range.min - s;
  if (s > range.max) return s - range.max;
  return 0.0;
}

struct DistanceSums {
  double manhattan = 0;
  double squared = 0;
  std::size_t shared = 0;
  std::size_t total = 0;
};

// Sums per-id differences after filling each side's missing ids with the
// weak-signal floor.
DistanceSums SumDistances(const SignalVector& a, const SignalVector& b) {
  if (a.empty() && b.empty()) {
    throw InvalidInputError("baseline distance of two empty scans is undefined");
  }
  DistanceSums sums;
  auto add = [&sums](Rssi x, Rssi y) {
    const double diff = std::abs(x - y);
    sums.manhattan += diff;
    sums.squared += diff * diff;
    ++sums.total;
  };
  auto ia = a.readings().begin();
  auto ib = b.readings().begin();
  const auto ea = a.readings().end();
  const auto eb = b.readings().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->id < ib->id)) {
      add(ia->rssi, kWeakSignalFloor);
      ++ia;
    } else if (ia == ea || ib->id < ia->id) {
      add(kWeakSignalFloor, ib->rssi);
      ++ib;
    } else {
      add(ia->rssi, ib->rssi);
      ++sums.shared;
      ++ia;
      ++ib;
    }
  }
  return sums;
}

double Denominator(const DistanceSums& sums, BaselineDenominator denominator) {
  return denominator == BaselineDenominator::kUnion
             ? static_cast<double>(sums.total)
             : static_cast<double>(sums.shared);
}

}  // namespace

double OverlapRatio(const SignalVector& scan,
                    const ProcessedVector& processed) {
  if (scan.empty() || processed.empty()) return 0.0;
  const std::size_t shared =
      ForEachShared(scan.readings(), processed.entries(),
                    [](const Reading&, const RangeEntry&) {});
  return static_cast<double>(shared) /
         static_cast<double>(std::min(scan.size(), processed.size()));
}

std::optional<double> RssiDifference(const SignalVector& scan,
                                     const ProcessedVector& processed) {
  double total = 0;
  const std::size_t shared = ForEachShared(
      scan.readings(), processed.entries(),
      [&total](const Reading& r, const RangeEntry& e) {
        total += OutOfRange(r.rssi, e.range);
      });
  if (shared == 0) return std::nullopt;
  return total / static_cast<double>(shared);
}

double VcontactSimilarity(const SignalVector& scan,
                          const ProcessedVector& processed) {
  if (scan.empty() || processed.empty()) return 0.0;
  double total = 0;
  const std::size_t shared = ForEachShared(
      scan.readings(), processed.entries(),
      [&total](const Reading& r, const RangeEntry& e) {
        total += OutOfRange(r.rssi, e.range);
      });
  if (shared == 0) return 0.0;
  const double overlap =
      static_cast<double>(shared) /
      static_cast<double>(std::min(scan.size(), processed.size()));
  const double difference = total / static_cast<double>(shared);
  return overlap / (difference + 1.0);
}

double Jaccard(const SignalVector& a, const SignalVector& b) {
  if (a.empty() && b.empty()) return 0.0;
  const std::size_t shared = ForEachShared(
      a.readings(), b.readings(), [](const Reading&, const Reading&) {});
  return static_cast<double>(shared) /
         static_cast<double>(a.size() + b.size() - shared);
}

double AverageManhattanDistance(const SignalVector& a, const SignalVector& b,
                                BaselineDenominator denominator) {
  const DistanceSums sums = SumDistances(a, b);
  const double n = Denominator(sums, denominator);
  if (n == 0) return std::numeric_limits<double>::infinity();
  return sums.manhattan / n;
}

double AverageEuclideanDistance(const SignalVector& a, const SignalVector& b,
                                BaselineDenominator denominator) {
  const DistanceSums sums = SumDistances(a, b);
  const double n = Denominator(sums, denominator);
  if (n == 0) return std::numeric_limits<double>::infinity();
  return std::sqrt(sums.squared) / n;
}

}  // namespace vcontact
