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

#ifndef NARSREL_ACTION_HPP_
#define NARSREL_ACTION_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "narsrel/term.hpp"

namespace narsrel {

// Reserved vocabulary of the matching-to-sample encoding.
namespace vocab {
inline constexpr std::string_view kRel = "rel";
inline constexpr std::string_view kSample = "sample";
inline constexpr std::string_view kLeft = "left";
inline constexpr std::string_view kRight = "right";
inline constexpr std::string_view kLoc = "loc";
inline constexpr std::string_view kOcr = "ocr";
inline constexpr std::string_view kGoal = "G";
inline constexpr std::string_view kSelf = "{SELF}";
inline constexpr std::string_view kMatch = "match";
inline constexpr std::string_view kSame = "SAME";
inline constexpr std::string_view kOpposite = "OPPOSITE";
}  // namespace vocab

enum class Side { kLeft, kRight };

inline std::string_view side_name(Side s) {
  return s == Side::kLeft ? vocab::kLeft : vocab::kRight;
}

inline Side parse_side(std::string_view s) {
  if (s == vocab::kLeft) return Side::kLeft;
  if (s == vocab::kRight) return Side::kRight;
  throw std::invalid_argument("side must be 'left' or 'right', got '" +
                              std::string(s) + "'");
}

/// `^match` of the sample against one comparison location.
struct Action {
  Side side = Side::kLeft;
  friend bool operator==(const Action&, const Action&) = default;
};

/// `<({SELF} * (sample * side)) --> ^match>`
inline Term action_term(Action a) {
  return Term::operation(
      Term::product(Term::atom(std::string(vocab::kSelf)),
                    Term::product(Term::atom(std::string(vocab::kSample)),
                                  Term::atom(std::string(side_name(a.side))))),
      std::string(vocab::kMatch));
}

enum class Outcome { kReinforced, kNotReinforced, kNoFeedback };

inline std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kReinforced: return "reinforced";
    case Outcome::kNotReinforced: return "not_reinforced";
    case Outcome::kNoFeedback: return "no_feedback";
  }
  return "";
}

inline Outcome parse_outcome(std::string_view s) {
  if (s == "reinforced") return Outcome::kReinforced;
  if (s == "not_reinforced") return Outcome::kNotReinforced;
  if (s == "no_feedback") return Outcome::kNoFeedback;
  throw std::invalid_argument("unknown outcome '" + std::string(s) + "'");
}

}  // namespace narsrel

#endif  // NARSREL_ACTION_HPP_
