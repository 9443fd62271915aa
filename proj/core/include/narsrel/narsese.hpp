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

#ifndef NARSREL_NARSESE_HPP_
#define NARSREL_NARSESE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "narsrel/term.hpp"
#include "narsrel/truth.hpp"

namespace narsrel {

enum class Punctuation { kJudgment, kGoal };
enum class Tense { kEternal, kPresent };

struct SentenceNode {
  Term term;
  Punctuation punctuation = Punctuation::kJudgment;
  Tense tense = Tense::kEternal;
  std::optional<TruthValue> truth;

  friend bool operator==(const SentenceNode&, const SentenceNode&) = default;
};

/// Parse failure. `offset` is the byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, std::string expected, std::string_view found);

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Parses one statement with punctuation, optional `:|:` tense and optional
/// `%f;c%` truth. Whitespace (including newlines) is insignificant, and the
/// typographic arrow `–>` is read as `-->`.
SentenceNode parse_sentence(std::string_view text);

/// Parses a bare term (no punctuation).
Term parse_term(std::string_view text);

/// One sentence per non-blank line; lines starting with `//` are skipped.
std::vector<SentenceNode> parse_lines(std::string_view text);

std::string print_canonical(const SentenceNode& node);
std::string print_canonical(const Term& term);

/// Collapses whitespace runs to one space, trims, and maps `–>` to `-->`.
std::string normalize_whitespace(std::string_view text);

}  // namespace narsrel

#endif  // NARSREL_NARSESE_HPP_
