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

// Reference listings of the trial encoding and each rung of the ladder,
// kept with their original line breaks and typography.

#ifndef NARSREL_TESTS_LISTINGS_HPP_
#define NARSREL_TESTS_LISTINGS_HPP_

#include <string_view>

namespace narsrel::testing {

struct Listing {
  std::string_view name;
  std::string_view text;
};

inline constexpr std::string_view kTrialListing =
    R"(<(rel * SAME) --> (loc * ocr)>. :|:
<(sample * X1) --> (loc * ocr)>. :|:
<(left * Y1) --> (loc * ocr)>. :|:
<(right * Y2) --> (loc * ocr)>. :|:
G! :|:)";

inline constexpr std::string_view kContingencyListing =
    R"((<(rel * SAME) --> (loc * ocr)> &/ 
 <(sample * X1) --> (loc * ocr)> &/
 <(left * Y1) --> (loc * ocr)> &/
 <({SELF} * (sample * left)) --> ^match>) =/> G>.)";

inline constexpr std::string_view kAcquiredListing =
    R"(<(X1 * Y1) --> (ocr * ocr)> &&
<(sample * left) --> (loc * loc)>.)";

inline constexpr std::string_view kImplicationListing =
    R"((<(X1 * Y1) --> (ocr * ocr)> &&
 <(sample * left) --> (loc * loc)>) ==> 
    (<(sample * X1) --> (loc * ocr)> &/
     <(left * Y1) --> (loc * ocr)> &/
     <({SELF} * (sample * left)) --> ^match>) =/> G>.)";

inline constexpr std::string_view kSchemaListing =
    R"((<($1 * $2) --> (ocr * ocr)> &&
 <($3 * $4) --> (loc * loc)>) ==> 
    (<($3 * $1) --> (loc * ocr)> &/
     <($4 * $2) --> (loc * ocr)> &/
     <({SELF} * ($3 * $4)) --> ^match>) =/> G>.)";

inline constexpr std::string_view kNamedListing = "<(X1 * Y1) --> SAME>.";

inline constexpr std::string_view kNamedLongListing =
    "<(SAME * (X1 * Y1)) --> (ocr * (ocr * ocr))>.";

// En dashes as typeset.
inline constexpr std::string_view kCombinatorialListing =
    "<(<($1 * #1) –> SAME> && <(#1 * $2) –> OPPOSITE>) ==>\n"
    "<($1 * $2) –> OPPOSITE>>";

/// Single-sentence listings (the trial listing holds five sentences).
inline constexpr Listing kSentenceListings[] = {
    {"contingency", kContingencyListing},
    {"acquired", kAcquiredListing},
    {"implication", kImplicationListing},
    {"schema", kSchemaListing},
    {"named", kNamedListing},
    {"named_long", kNamedLongListing},
    {"combinatorial", kCombinatorialListing},
};

}  // namespace narsrel::testing

#endif  // NARSREL_TESTS_LISTINGS_HPP_
