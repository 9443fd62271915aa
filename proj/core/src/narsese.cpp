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

#include "narsrel/narsese.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace narsrel {

SyntaxError::SyntaxError(std::size_t offset, std::string expected,
                         std::string_view found)
    : std::runtime_error("syntax error at byte " + std::to_string(offset) +
                         ": expected " + expected + ", found " +
                         (found.empty() ? std::string("end of input")
                                        : "'" + std::string(found) + "'")),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

constexpr std::string_view kEnDashArrow = "\xE2\x80\x93>";

enum class Tok {
  kLParen,
  kRParen,
  kLAngle,
  kRAngle,
  kInherit,      // -->
  kImplies,      // ==>
  kPredImplies,  // =/>
  kStar,
  kSeq,   // &/
  kConj,  // &&
  kDot,
  kBang,
  kPresent,  // :|:
  kTruth,    // %f;c%
  kIndepVar,
  kDepVar,
  kOpName,
  kIdent,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string_view text;
  std::size_t offset = 0;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::kEnd, {}, pos_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool starts(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  Token take(Tok kind, std::size_t len) {
    Token t{kind, src_.substr(pos_, len), pos_};
    pos_ += len;
    return t;
  }

  Token next() {
    const char c = src_[pos_];
    if (starts("-->")) return take(Tok::kInherit, 3);
    if (starts(kEnDashArrow)) return take(Tok::kInherit, kEnDashArrow.size());
    if (starts("==>")) return take(Tok::kImplies, 3);
    if (starts("=/>")) return take(Tok::kPredImplies, 3);
    if (starts("&/")) return take(Tok::kSeq, 2);
    if (starts("&&")) return take(Tok::kConj, 2);
    if (starts(":|:")) return take(Tok::kPresent, 3);
    if (starts("{SELF}")) return take(Tok::kIdent, 6);
    switch (c) {
      case '(': return take(Tok::kLParen, 1);
      case ')': return take(Tok::kRParen, 1);
      case '<': return take(Tok::kLAngle, 1);
      case '>': return take(Tok::kRAngle, 1);
      case '*': return take(Tok::kStar, 1);
      case '.': return take(Tok::kDot, 1);
      case '!': return take(Tok::kBang, 1);
      case '%': {
        const auto close = src_.find('%', pos_ + 1);
        if (close == std::string_view::npos) {
          throw SyntaxError(pos_, "closing '%' of truth value",
                            src_.substr(pos_));
        }
        return take(Tok::kTruth, close - pos_ + 1);
      }
      case '$':
      case '#': {
        std::size_t len = 1;
        while (pos_ + len < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_ + len]))) {
          ++len;
        }
        if (len == 1) {
          throw SyntaxError(pos_ + 1, "variable number", src_.substr(pos_ + 1, 1));
        }
        return take(c == '$' ? Tok::kIndepVar : Tok::kDepVar, len);
      }
      case '^': {
        std::size_t len = 1;
        while (pos_ + len < src_.size() && ident_char(src_[pos_ + len])) ++len;
        if (len == 1) {
          throw SyntaxError(pos_ + 1, "operator name", src_.substr(pos_ + 1, 1));
        }
        return take(Tok::kOpName, len);
      }
      default:
        break;
    }
    if (ident_char(c)) {
      std::size_t len = 1;
      while (pos_ + len < src_.size() && ident_char(src_[pos_ + len])) ++len;
      return take(Tok::kIdent, len);
    }
    throw SyntaxError(pos_, "term or punctuation", src_.substr(pos_, 1));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int parse_var_id(const Token& t) {
  int id = 0;
  const auto digits = t.text.substr(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (ec != std::errc() || id < 1) {
    throw SyntaxError(t.offset + 1, "positive variable number", digits);
  }
  return id;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).run()) {}

  SentenceNode sentence() {
    SentenceNode node{top_term(), Punctuation::kJudgment, Tense::kEternal,
                      std::nullopt};
    if (accept(Tok::kDot)) {
      node.punctuation = Punctuation::kJudgment;
    } else if (accept(Tok::kBang)) {
      node.punctuation = Punctuation::kGoal;
    } else {
      fail("'.' or '!'");
    }
    if (accept(Tok::kPresent)) node.tense = Tense::kPresent;
    if (peek().kind == Tok::kTruth) node.truth = truth(advance());
    expect(Tok::kEnd, "end of sentence");
    return node;
  }

  Term term_only() {
    Term t = top_term();
    expect(Tok::kEnd, "end of term");
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().offset, expected, peek().text);
  }

  void expect(Tok kind, const std::string& expected) {
    if (!accept(kind)) fail(expected);
  }

  // Outermost level: also accepts the bracket-elided forms used in the
  // trial listings.
  Term top_term() {
    Term first = primary();
    if (accept(Tok::kConj)) {
      return Term::conjunction(std::move(first), primary());
    }
    if (accept(Tok::kPredImplies)) {
      Term consequent = primary();
      expect(Tok::kRAngle, "'>' closing the implication");
      return Term::implication(ImplicationKind::kPredictive, std::move(first),
                               std::move(consequent));
    }
    if (accept(Tok::kImplies)) {
      Term consequent = primary();
      if (accept(Tok::kPredImplies)) {
        Term goal = primary();
        expect(Tok::kRAngle, "'>' closing the implication");
        consequent = Term::implication(ImplicationKind::kPredictive,
                                       std::move(consequent), std::move(goal));
      } else {
        accept(Tok::kRAngle);
      }
      return Term::implication(ImplicationKind::kPlain, std::move(first),
                               std::move(consequent));
    }
    return first;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent:
        advance();
        return Term::atom(std::string(t.text));
      case Tok::kIndepVar:
        advance();
        return Term::independent_var(parse_var_id(t));
      case Tok::kDepVar:
        advance();
        return Term::dependent_var(parse_var_id(t));
      case Tok::kLParen:
        advance();
        return compound();
      case Tok::kLAngle:
        advance();
        return statement();
      default:
        fail("term");
    }
  }

  Term compound() {
    Term first = primary();
    if (accept(Tok::kStar)) {
      Term second = primary();
      if (peek().kind == Tok::kStar) fail("')' (products are binary)");
      expect(Tok::kRParen, "')'");
      return Term::product(std::move(first), std::move(second));
    }
    if (peek().kind == Tok::kSeq) {
      std::vector<Term> events{std::move(first)};
      while (accept(Tok::kSeq)) events.push_back(primary());
      expect(Tok::kRParen, "')' or '&/'");
      return Term::sequence(std::move(events));
    }
    if (accept(Tok::kConj)) {
      Term second = primary();
      if (peek().kind == Tok::kConj) fail("')' (conjunctions are binary)");
      expect(Tok::kRParen, "')'");
      return Term::conjunction(std::move(first), std::move(second));
    }
    fail("'*', '&/' or '&&'");
  }

  Term statement() {
    Term subject = primary();
    if (accept(Tok::kInherit)) {
      if (peek().kind == Tok::kOpName) {
        std::string name(advance().text.substr(1));
        expect(Tok::kRAngle, "'>'");
        return Term::operation(std::move(subject), std::move(name));
      }
      Term predicate = primary();
      expect(Tok::kRAngle, "'>'");
      return Term::inheritance(std::move(subject), std::move(predicate));
    }
    ImplicationKind kind;
    if (accept(Tok::kImplies)) {
      kind = ImplicationKind::kPlain;
    } else if (accept(Tok::kPredImplies)) {
      kind = ImplicationKind::kPredictive;
    } else {
      fail("'-->', '==>' or '=/>'");
    }
    Term consequent = primary();
    expect(Tok::kRAngle, "'>'");
    return Term::implication(kind, std::move(subject), std::move(consequent));
  }

  TruthValue truth(const Token& t) {
    // %f;c%
    const auto body = t.text.substr(1, t.text.size() - 2);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw SyntaxError(t.offset, "truth of the form %f;c%", t.text);
    }
    TruthValue v;
    const auto fs = body.substr(0, semi);
    const auto cs = body.substr(semi + 1);
    const auto r1 = std::from_chars(fs.data(), fs.data() + fs.size(), v.frequency);
    const auto r2 = std::from_chars(cs.data(), cs.data() + cs.size(), v.confidence);
    if (r1.ec != std::errc() || r1.ptr != fs.data() + fs.size() ||
        r2.ec != std::errc() || r2.ptr != cs.data() + cs.size() ||
        !v.in_range()) {
      throw SyntaxError(t.offset, "frequency in [0,1] and confidence in [0,1)",
                        t.text);
    }
    return v;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

SentenceNode parse_sentence(std::string_view text) {
  return Parser(text).sentence();
}

Term parse_term(std::string_view text) { return Parser(text).term_only(); }

std::vector<SentenceNode> parse_lines(std::string_view text) {
  std::vector<SentenceNode> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line.substr(first, 2) != "//") {
      try {
        out.push_back(parse_sentence(line));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.offset(), e.expected(),
                          line.substr(std::min(e.offset(), line.size()), 1));
      }
    }
    start = end + 1;
  }
  return out;
}

std::string print_canonical(const Term& term) { return to_string(term); }

std::string print_canonical(const SentenceNode& node) {
  std::string out = to_string(node.term);
  out += node.punctuation == Punctuation::kGoal ? '!' : '.';
  if (node.tense == Tense::kPresent) out += " :|:";
  if (node.truth) {
    out += " %" + shortest(node.truth->frequency) + ";" +
           shortest(node.truth->confidence) + "%";
  }
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.substr(i, kEnDashArrow.size()) == kEnDashArrow) {
      if (pending_space && !out.empty()) out += ' ';
      pending_space = false;
      out += "-->";
      i += kEnDashArrow.size() - 1;
      continue;
    }
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += c;
  }
  return out;
}

}  // namespace narsrel
