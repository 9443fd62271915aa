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

#ifndef NARSREL_MEMORY_HPP_
#define NARSREL_MEMORY_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "narsrel/narsese.hpp"
#include "narsrel/term.hpp"
#include "narsrel/truth.hpp"

namespace narsrel {

struct Belief {
  Term term;
  TruthValue truth;
  Stamp stamp;
  double priority = 1.0;
};

enum class RevisionResult { kCreated, kRevised, kOverlap };

/// Eternal beliefs, one per term, keyed by canonical print. Iteration order
/// is the lexicographic order of the keys.
class Memory {
 public:
  using Map = std::map<std::string, Belief, std::less<>>;

  explicit Memory(double priority_decay = 0.99)
      : priority_decay_(priority_decay) {}

  /// Creates the belief, or revises it in place when the stamps are
  /// disjoint. Overlapping evidence leaves the belief unchanged.
  RevisionResult add(const Term& term, const TruthValue& truth,
                     const Stamp& stamp, Tick now);

  const Belief* find(const Term& term) const;
  const Belief* find(std::string_view key) const;

  /// Multiplies every priority by the decay factor.
  void decay();
  /// Raises a belief's priority after it was used in a decision.
  void touch(const Term& term);

  std::size_t size() const { return beliefs_.size(); }
  Map::const_iterator begin() const { return beliefs_.begin(); }
  Map::const_iterator end() const { return beliefs_.end(); }

 private:
  Map beliefs_;
  double priority_decay_;
};

struct BufferedEvent {
  SentenceNode sentence;
  Tick tick = 0;
};

/// Bounded FIFO of present-tense events.
class EventBuffer {
 public:
  explicit EventBuffer(std::size_t capacity = 8)
      : capacity_(capacity == 0 ? 1 : capacity) {}

  /// Appends; returns the evicted oldest event if the buffer was full.
  std::optional<BufferedEvent> push(BufferedEvent event);
  void clear() { events_.clear(); }

  std::size_t size() const { return events_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::deque<BufferedEvent>& events() const { return events_; }

 private:
  std::deque<BufferedEvent> events_;
  std::size_t capacity_;
};

/// `tick | kind | narsese | {f c}` lines; `-` when no truth applies.
class Trace {
 public:
  void record(Tick tick, std::string_view kind, std::string_view narsese,
              const std::optional<TruthValue>& truth = std::nullopt);

  const std::vector<std::string>& lines() const { return lines_; }
  std::string str() const;
  bool contains(std::string_view needle) const;
  void clear() { lines_.clear(); }

 private:
  std::vector<std::string> lines_;
};

}  // namespace narsrel

#endif  // NARSREL_MEMORY_HPP_
