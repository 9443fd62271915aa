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

#include "narsrel/truth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace narsrel {

double w2c(double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw std::domain_error("evidence weight must be finite and non-negative");
  }
  return weight / (weight + kEvidentialHorizon);
}

double c2w(double confidence) {
  if (!(confidence >= 0.0 && confidence < 1.0)) {
    throw std::domain_error("confidence must lie in [0, 1)");
  }
  return kEvidentialHorizon * confidence / (1.0 - confidence);
}

TruthValue revise(const TruthValue& a, const TruthValue& b) {
  const double wa = c2w(a.confidence);
  const double wb = c2w(b.confidence);
  const double w = wa + wb;
  if (w == 0.0) {
    return {0.5 * (a.frequency + b.frequency), 0.0};
  }
  // Near the horizon w can be large; keep c strictly below 1.
  double c = w2c(w);
  if (c >= 1.0) c = std::nextafter(1.0, 0.0);
  return {(wa * a.frequency + wb * b.frequency) / w, c};
}

TruthValue deduction(const TruthValue& premise, const TruthValue& rule) {
  const double f = premise.frequency * rule.frequency;
  return {f, f * premise.confidence * rule.confidence};
}

TruthValue intersection(const TruthValue& a, const TruthValue& b) {
  return {a.frequency * b.frequency, a.confidence * b.confidence};
}

TruthValue induction_evidence(bool positive) {
  return {positive ? 1.0 : 0.0, w2c(1.0)};
}

double expectation(const TruthValue& t) {
  return t.confidence * (t.frequency - 0.5) + 0.5;
}

std::string format_truth(const TruthValue& t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "{%.2f %.2f}", t.frequency, t.confidence);
  return buf;
}

Stamp::Stamp(EvidenceId id, Tick created, std::size_t capacity)
    : ids_{id}, created_(created), capacity_(std::max<std::size_t>(capacity, 1)) {}

Stamp Stamp::merge(const Stamp& a, const Stamp& b, Tick created) {
  Stamp out = a;
  out.created_ = created;
  for (EvidenceId id : b.ids_) out.add(id);
  return out;
}

bool Stamp::overlaps(const Stamp& other) const {
  return std::any_of(ids_.begin(), ids_.end(),
                     [&](EvidenceId id) { return other.contains(id); });
}

bool Stamp::contains(EvidenceId id) const {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

void Stamp::add(EvidenceId id) {
  if (contains(id)) return;
  ids_.push_back(id);
  while (ids_.size() > capacity_) ids_.pop_front();
}

}  // namespace narsrel
