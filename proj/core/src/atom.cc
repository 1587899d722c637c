// Copyright 2026 The indepkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "indepkit/atom.h"

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>

#include "indepkit/error.h"

namespace indepkit {
namespace {

constexpr std::string_view kAsciiOp = "_||_";
constexpr std::string_view kUnicodeOp = "\xE2\x8A\xA5";  // ⊥

struct SyntaxError {
  std::string message;
  std::size_t column;  // 1-based
};

enum class TokenKind { kIdent, kComma, kLBrace, kRBrace, kOp, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t column;
  Modality modality = Modality::kPlain;
};

bool starts_operator(std::string_view s, std::size_t i) {
  return s.substr(i, kAsciiOp.size()) == kAsciiOp ||
         s.substr(i, kUnicodeOp.size()) == kUnicodeOp;
}

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool is_ident_char(std::string_view s, std::size_t i) {
  if (i >= s.size()) return false;
  const char c = s[i];
  return !is_space(c) && c != ',' && c != '{' && c != '}' &&
         !starts_operator(s, i);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) return {TokenKind::kEnd, {}, start + 1};
    const char c = text_[pos_];
    if (c == ',') return single(TokenKind::kComma);
    if (c == '{') return single(TokenKind::kLBrace);
    if (c == '}') return single(TokenKind::kRBrace);
    if (text_.substr(pos_, kAsciiOp.size()) == kAsciiOp) {
      pos_ += kAsciiOp.size();
      return op(start, /*allow_underscore=*/false);
    }
    if (text_.substr(pos_, kUnicodeOp.size()) == kUnicodeOp) {
      pos_ += kUnicodeOp.size();
      return op(start, /*allow_underscore=*/true);
    }
    while (is_ident_char(text_, pos_)) ++pos_;
    return {TokenKind::kIdent, text_.substr(start, pos_ - start), start + 1};
  }

 private:
  Token single(TokenKind kind) {
    ++pos_;
    return {kind, text_.substr(pos_ - 1, 1), pos_};
  }

  Token op(std::size_t start, bool allow_underscore) {
    Token t{TokenKind::kOp, {}, start + 1};
    std::size_t i = pos_;
    if (allow_underscore && i < text_.size() && text_[i] == '_') ++i;
    if (i < text_.size() && (text_[i] == 'p' || text_[i] == 'c') &&
        !is_ident_char(text_, i + 1)) {
      t.modality = text_[i] == 'p' ? Modality::kPossible : Modality::kCertain;
      pos_ = i + 1;
    }
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  return t.kind == TokenKind::kEnd ? "end of input"
                                   : "'" + std::string(t.text) + "'";
}

AttributeSet parse_set(Lexer& lex, Token& tok, const Schema& schema) {
  AttributeSet out;
  const bool braced = tok.kind == TokenKind::kLBrace;
  if (braced) {
    tok = lex.next();
    if (tok.kind == TokenKind::kRBrace) {
      tok = lex.next();
      return out;
    }
  }
  while (true) {
    if (tok.kind != TokenKind::kIdent) {
      throw SyntaxError{"expected attribute name, found " + describe(tok),
                        tok.column};
    }
    auto p = schema.find(tok.text);
    if (!p) {
      throw SyntaxError{"unknown attribute '" + std::string(tok.text) + "'",
                        tok.column};
    }
    out.insert(*p);
    tok = lex.next();
    if (tok.kind != TokenKind::kComma) break;
    tok = lex.next();
  }
  if (braced) {
    if (tok.kind != TokenKind::kRBrace) {
      throw SyntaxError{"expected '}', found " + describe(tok), tok.column};
    }
    tok = lex.next();
  }
  return out;
}

Atom parse_atom_impl(std::string_view text, const Schema& schema) {
  Lexer lex(text);
  Token tok = lex.next();
  Atom a;
  a.lhs = parse_set(lex, tok, schema);
  if (tok.kind != TokenKind::kOp) {
    throw SyntaxError{"expected independence operator, found " + describe(tok),
                      tok.column};
  }
  a.modality = tok.modality;
  tok = lex.next();
  a.rhs = parse_set(lex, tok, schema);
  if (tok.kind != TokenKind::kEnd) {
    throw SyntaxError{"unexpected " + describe(tok), tok.column};
  }
  return a;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space);
}

}  // namespace

std::string_view modality_name(Modality m) {
  switch (m) {
    case Modality::kPlain: return "plain";
    case Modality::kPossible: return "possible";
    case Modality::kCertain: return "certain";
  }
  return "?";
}

std::size_t AtomHash::operator()(const Atom& a) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(a.lhs.bits());
  h ^= std::hash<std::uint64_t>{}(a.rhs.bits() * 0x9e3779b97f4a7c15ULL) +
       (h << 6) + (h >> 2);
  return h * 3 + static_cast<std::size_t>(a.modality);
}

Atom ind(const Atom& a) { return {a.lhs, a.rhs, Modality::kPlain}; }

bool is_disjoint(const Atom& a) { return !a.lhs.intersects(a.rhs); }

bool is_pia_star(const Atom& a) {
  if (a.modality != Modality::kPossible) {
    throw ScopeError("PIA* is defined for possible atoms only");
  }
  const int x = a.lhs.size();
  const int y = a.rhs.size();
  return x == 1 || y == 1 || (x > y ? x - y : y - x) <= 1;
}

ConstraintSet::ConstraintSet(std::initializer_list<Atom> atoms) {
  for (const Atom& a : atoms) insert(a);
}

bool ConstraintSet::insert(const Atom& a) {
  if (!index_.insert(a).second) return false;
  atoms_.push_back(a);
  return true;
}

bool ConstraintSet::contains(const Atom& a) const { return index_.count(a) > 0; }

AttributeSet ConstraintSet::attributes() const {
  AttributeSet out;
  for (const Atom& a : atoms_) out |= a.attributes();
  return out;
}

bool operator==(const ConstraintSet& a, const ConstraintSet& b) {
  return a.index_ == b.index_;
}

ConstraintSet ind(const ConstraintSet& atoms) {
  ConstraintSet out;
  for (const Atom& a : atoms) out.insert(ind(a));
  return out;
}

Atom parse_atom(std::string_view text, const Schema& schema) {
  try {
    return parse_atom_impl(text, schema);
  } catch (const SyntaxError& e) {
    throw ParseError(e.message, 0, e.column);
  }
}

std::string render_operator(Modality m, Notation notation) {
  std::string op(notation == Notation::kAscii ? kAsciiOp : kUnicodeOp);
  if (m == Modality::kPossible) op += 'p';
  if (m == Modality::kCertain) op += 'c';
  return op;
}

std::string render(const Atom& a, const Schema& schema, Notation notation) {
  return schema.format_set(a.lhs) + " " + render_operator(a.modality, notation) +
         " " + schema.format_set(a.rhs);
}

std::vector<std::string> scan_attribute_names(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    Lexer lex(strip_comment(text.substr(start, end - start)));
    for (Token t = lex.next(); t.kind != TokenKind::kEnd; t = lex.next()) {
      if (t.kind == TokenKind::kIdent &&
          std::find(out.begin(), out.end(), t.text) == out.end()) {
        out.emplace_back(t.text);
      }
    }
    start = end + 1;
  }
  return out;
}

ConstraintSet parse_constraints(std::istream& in, const Schema& schema) {
  ConstraintSet out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view body = strip_comment(line);
    if (blank(body)) continue;
    try {
      out.insert(parse_atom_impl(body, schema));
    } catch (const SyntaxError& e) {
      throw ParseError(e.message, number, e.column);
    }
  }
  return out;
}

ConstraintFile read_constraint_file(std::istream& in,
                                    const std::vector<std::string>& extra_texts) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  std::vector<std::string> names = scan_attribute_names(text);
  for (const std::string& extra : extra_texts) {
    for (std::string& n : scan_attribute_names(extra)) {
      if (std::find(names.begin(), names.end(), n) == names.end()) {
        names.push_back(std::move(n));
      }
    }
  }
  if (names.size() > static_cast<std::size_t>(kMaxAttributes)) {
    throw LimitError("too many attributes in constraint file");
  }
  ConstraintFile file;
  file.schema = std::make_shared<const Schema>(Schema::uniform(names, 2));
  std::istringstream lines(text);
  file.atoms = parse_constraints(lines, *file.schema);
  return file;
}

}  // namespace indepkit
