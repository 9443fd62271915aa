// Copyright 2026 The narsrel Authors
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

#ifndef NARSREL_TRUTH_HPP_
#define NARSREL_TRUTH_HPP_

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>

namespace narsrel {

/// Evidence horizon k in c = w / (w + k).
inline constexpr double kEvidentialHorizon = 1.0;

/// Frequency/confidence pair. Confidence stays strictly below 1.
struct TruthValue {
  double frequency = 0.0;
  double confidence = 0.0;

  bool in_range() const {
    return frequency >= 0.0 && frequency <= 1.0 && confidence >= 0.0 &&
           confidence < 1.0;
  }

  friend bool operator==(const TruthValue&, const TruthValue&) = default;
};

/// Throws std::domain_error for negative or non-finite weight.
double w2c(double weight);
/// Throws std::domain_error unless 0 <= c < 1.
double c2w(double confidence);

/// Pools two bodies of evidence. Stamps must be checked by the caller.
TruthValue revise(const TruthValue& a, const TruthValue& b);

/// Forward use of an implication: premise truth times rule truth.
TruthValue deduction(const TruthValue& premise, const TruthValue& rule);

/// Truth of the conjunction of two independent premises.
TruthValue intersection(const TruthValue& a, const TruthValue& b);

/// One observation: (1, w2c(1)) if positive, (0, w2c(1)) otherwise.
TruthValue induction_evidence(bool positive);

double expectation(const TruthValue& t);

/// `{f c}` with two decimals, as written to trace logs.
std::string format_truth(const TruthValue& t);

using EvidenceId = std::uint64_t;
using Tick = std::uint64_t;

/// Evidential base of a belief. Revision is only allowed between beliefs
/// whose bases are disjoint.
class Stamp {
 public:
  static constexpr std::size_t kDefaultCapacity = 64;

  Stamp() = default;
  Stamp(EvidenceId id, Tick created,
        std::size_t capacity = kDefaultCapacity);

  /// Union of both bases, oldest ids evicted beyond the capacity of `a`.
  static Stamp merge(const Stamp& a, const Stamp& b, Tick created);

  bool overlaps(const Stamp& other) const;
  bool contains(EvidenceId id) const;

  const std::deque<EvidenceId>& ids() const { return ids_; }
  Tick creation_time() const { return created_; }
  std::size_t capacity() const { return capacity_; }

  void add(EvidenceId id);

  friend bool operator==(const Stamp&, const Stamp&) = default;

 private:
  std::deque<EvidenceId> ids_;  // oldest first
  Tick created_ = 0;
  std::size_t capacity_ = kDefaultCapacity;
};

}  // namespace narsrel

#endif  // NARSREL_TRUTH_HPP_
