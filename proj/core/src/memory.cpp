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

#include "narsrel/memory.hpp"

#include <algorithm>

namespace narsrel {

RevisionResult Memory::add(const Term& term, const TruthValue& truth,
                           const Stamp& stamp, Tick now) {
  std::string key = to_string(term);
  auto it = beliefs_.find(key);
  if (it == beliefs_.end()) {
    beliefs_.emplace(std::move(key), Belief{term, truth, stamp, 1.0});
    return RevisionResult::kCreated;
  }
  Belief& b = it->second;
  if (b.stamp.overlaps(stamp)) return RevisionResult::kOverlap;
  b.truth = revise(b.truth, truth);
  b.stamp = Stamp::merge(b.stamp, stamp, now);
  b.priority = 1.0;
  return RevisionResult::kRevised;
}

const Belief* Memory::find(const Term& term) const {
  return find(to_string(term));
}

const Belief* Memory::find(std::string_view key) const {
  const auto it = beliefs_.find(key);
  return it == beliefs_.end() ? nullptr : &it->second;
}

void Memory::decay() {
  for (auto& [key, b] : beliefs_) b.priority *= priority_decay_;
}

void Memory::touch(const Term& term) {
  const auto it = beliefs_.find(to_string(term));
  if (it == beliefs_.end()) return;
  it->second.priority = std::min(1.0, it->second.priority + 0.1);
}

std::optional<BufferedEvent> EventBuffer::push(BufferedEvent event) {
  std::optional<BufferedEvent> evicted;
  if (events_.size() == capacity_) {
    evicted = std::move(events_.front());
    events_.pop_front();
  }
  events_.push_back(std::move(event));
  return evicted;
}

void Trace::record(Tick tick, std::string_view kind, std::string_view narsese,
                   const std::optional<TruthValue>& truth) {
  std::string line = std::to_string(tick);
  line += " | ";
  line += kind;
  line += " | ";
  line += narsese;
  line += " | ";
  line += truth ? format_truth(*truth) : std::string("-");
  lines_.push_back(std::move(line));
}

std::string Trace::str() const {
  std::string out;
  for (const auto& l : lines_) {
    out += l;
    out += '\n';
  }
  return out;
}

bool Trace::contains(std::string_view needle) const {
  return std::any_of(lines_.begin(), lines_.end(), [&](const std::string& l) {
    return l.find(needle) != std::string::npos;
  });
}

}  // namespace narsrel
