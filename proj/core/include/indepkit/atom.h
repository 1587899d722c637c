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

// Independence atoms and the constraint language.
//
//   atom := set op set
//   op   := "_||_" | "_||_p" | "_||_c" | "⊥" | "⊥p" | "⊥c"
//   set  := "{}" | ident ("," ident)*
//
// A constraint file holds one atom per line; `#` starts a comment.

#ifndef INDEPKIT_ATOM_H_
#define INDEPKIT_ATOM_H_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "indepkit/attribute_set.h"
#include "indepkit/schema.h"

namespace indepkit {

enum class Modality : unsigned char { kPlain = 0, kPossible = 1, kCertain = 2 };

std::string_view modality_name(Modality m);  // "plain", "possible", "certain"

// X ⊥ Y, X ⊥p Y or X ⊥c Y. Equality is element-order insensitive on each side
// but distinguishes X ⊥ Y from Y ⊥ X.
struct Atom {
  AttributeSet lhs;
  AttributeSet rhs;
  Modality modality = Modality::kPlain;

  AttributeSet attributes() const { return lhs | rhs; }
  Atom swapped() const { return {rhs, lhs, modality}; }

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const noexcept;
};

// The plain atom with the same sides.
Atom ind(const Atom& a);
bool is_disjoint(const Atom& a);
// |X| = 1 or |Y| = 1, or ||X| - |Y|| <= 1. Throws ScopeError unless `a` is
// possible.
bool is_pia_star(const Atom& a);

// Duplicate-free atom collection in insertion order.
class ConstraintSet {
 public:
  ConstraintSet() = default;
  ConstraintSet(std::initializer_list<Atom> atoms);

  // Returns false if the atom was already present.
  bool insert(const Atom& a);
  bool contains(const Atom& a) const;

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  AttributeSet attributes() const;

  friend bool operator==(const ConstraintSet& a, const ConstraintSet& b);

 private:
  std::vector<Atom> atoms_;
  std::unordered_set<Atom, AtomHash> index_;
};

ConstraintSet ind(const ConstraintSet& atoms);

enum class Notation {
  kAscii,    // _||_, _||_p, _||_c
  kUnicode,  // ⊥, ⊥p, ⊥c
};

// Throws ParseError (with the 1-based column of the offending token) on
// malformed text and SchemaError-derived ParseError on unknown attributes.
Atom parse_atom(std::string_view text, const Schema& schema);

// Canonical text: attributes in schema order, single spaces around the
// operator. parse_atom(render(a)) == a.
std::string render(const Atom& a, const Schema& schema,
                   Notation notation = Notation::kAscii);
std::string render_operator(Modality m, Notation notation);

// Attribute names mentioned in `text`, in order of first appearance. Used to
// build a schema for constraint files that come without a relation.
std::vector<std::string> scan_attribute_names(std::string_view text);

// Reads a constraint file against an existing schema. Errors carry the line.
ConstraintSet parse_constraints(std::istream& in, const Schema& schema);

struct ConstraintFile {
  std::shared_ptr<const Schema> schema;
  ConstraintSet atoms;
};

// Reads a constraint file and derives its schema from the attribute names
// it mentions plus those of `extra_texts` (e.g. a query atom). Domains are
// {"0", "1"}.
ConstraintFile read_constraint_file(std::istream& in,
                                    const std::vector<std::string>& extra_texts = {});

}  // namespace indepkit

#endif  // INDEPKIT_ATOM_H_
