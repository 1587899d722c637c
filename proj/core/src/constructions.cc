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

#include "indepkit/constructions.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "indepkit/model_check.h"

namespace indepkit {
namespace {

std::shared_ptr<const Schema> binary_schema(std::vector<std::string> names) {
  return std::make_shared<const Schema>(Schema::uniform(std::move(names), 2));
}

std::shared_ptr<const Schema> abc_schema() {
  static const auto schema = binary_schema({"A", "B", "C"});
  return schema;
}

Relation from_text(std::shared_ptr<const Schema> schema,
                   const std::vector<std::vector<std::string>>& rows) {
  Relation r(std::move(schema));
  for (const auto& row : rows) r.add_text(row);
  return r;
}

// Binary digits of v, most significant first.
std::vector<Value> bits(std::uint64_t v, int width) {
  std::vector<Value> out(width);
  for (int i = 0; i < width; ++i) {
    out[i] = static_cast<Value>((v >> (width - 1 - i)) & 1U);
  }
  return out;
}

std::vector<std::string> names_of(const Schema& names, AttributeSet set) {
  std::vector<std::string> out;
  for (int p : set.positions()) out.push_back(names.name(p));
  return out;
}

}  // namespace

Relation exchange_failure_relation() {
  return from_text(abc_schema(), {{"0", "0", "0"},
                                  {"*", "1", "0"},
                                  {"*", "0", "1"},
                                  {"1", "1", "1"}});
}

Relation exchange_failure_grounding_ab() {
  return from_text(abc_schema(), {{"0", "0", "0"},
                                  {"0", "1", "0"},
                                  {"1", "0", "1"},
                                  {"1", "1", "1"}});
}

Relation exchange_failure_grounding_ab_c() {
  return from_text(abc_schema(), {{"0", "0", "0"},
                                  {"1", "1", "0"},
                                  {"0", "0", "1"},
                                  {"1", "1", "1"}});
}

SeparatingFamily pia_separating_family(int k, int m, int extra) {
  if (m < 1 || k < m || extra < 0) {
    throw std::invalid_argument("separating family needs k >= m >= 1");
  }
  if (k + m + extra > kMaxAttributes || k > 20) {
    throw std::invalid_argument("separating family too large");
  }
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("X" + std::to_string(i));
  for (int i = 1; i <= m; ++i) names.push_back("Y" + std::to_string(i));
  for (int i = 1; i <= extra; ++i) names.push_back("Z" + std::to_string(i));
  const int width = k + m + extra;

  const std::uint64_t rows_x = std::uint64_t{1} << k;
  const std::uint64_t total = m == 1
                                  ? (std::uint64_t{1} << (k + 1)) - 1
                                  : rows_x * ((std::uint64_t{1} << m) - 1) - 1;
  const std::uint64_t with_y = m == 1 ? 2 : (std::uint64_t{1} << m) - 1;

  SeparatingFamily out{Relation(binary_schema(names)),
                       AttributeSet::first(k),
                       AttributeSet::first(k + m) - AttributeSet::first(k),
                       AttributeSet::first(width) - AttributeSet::first(k + m)};
  for (std::uint64_t i = 0; i < rows_x; ++i) {
    Tuple t(width, 0);
    const std::vector<Value> xv = bits(i, k);
    std::copy(xv.begin(), xv.end(), t.begin());
    if (i < with_y) {
      const std::vector<Value> yv = bits(i, m);
      std::copy(yv.begin(), yv.end(), t.begin() + k);
    } else {
      std::fill(t.begin() + k, t.begin() + k + m, kNull);
    }
    out.relation.add(std::move(t));
  }
  Tuple blank(width, 0);
  std::fill(blank.begin(), blank.begin() + k + m, kNull);
  out.relation.add(std::move(blank), total - rows_x);
  return out;
}

Relation parity_relation(const Schema& names, AttributeSet x, AttributeSet y,
                         AttributeSet z, int a1, bool include_nulled) {
  if (x.empty() || y.empty() || x.intersects(y) || x.intersects(z) ||
      y.intersects(z) || !x.contains(a1) ||
      !(x | y | z).subset_of(names.all())) {
    throw std::invalid_argument(
        "parity relation needs disjoint X, Y, Z with X, Y non-empty and A1 in X");
  }
  const AttributeSet all = x | y | z;
  const std::vector<int> positions = all.positions();
  const int width = static_cast<int>(positions.size());
  const int a1_col = static_cast<int>(
      std::find(positions.begin(), positions.end(), a1) - positions.begin());
  std::vector<int> free_cols;
  for (int c = 0; c < width; ++c) {
    if (c != a1_col && (x | y).contains(positions[c])) free_cols.push_back(c);
  }
  if (free_cols.size() > 20) throw std::invalid_argument("parity relation too large");

  Relation r(binary_schema(names_of(names, all)));
  std::vector<Tuple> r1;
  const std::uint64_t count = std::uint64_t{1} << free_cols.size();
  for (std::uint64_t v = 0; v < count; ++v) {
    Tuple t(width, 0);
    const std::vector<Value> b = bits(v, static_cast<int>(free_cols.size()));
    Value parity = 0;
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
      t[free_cols[i]] = b[i];
      parity ^= b[i];
    }
    t[a1_col] = parity;
    r1.push_back(t);
  }
  for (const Tuple& t : r1) r.add(t);
  if (include_nulled) {
    for (Tuple t : r1) {
      t[a1_col] = kNull;
      r.add(std::move(t));
    }
  }
  return r;
}

Relation constancy_counterexample(const Schema& names, int b,
                                  AttributeSet attrs) {
  if (!attrs.contains(b) || !attrs.subset_of(names.all())) {
    throw std::invalid_argument("constancy counterexample needs B in R");
  }
  const std::vector<int> positions = attrs.positions();
  const int col = static_cast<int>(
      std::find(positions.begin(), positions.end(), b) - positions.begin());
  Relation r(binary_schema(names_of(names, attrs)));
  for (Value v : {0, 1}) {
    Tuple t(positions.size(), 0);
    t[col] = v;
    r.add(std::move(t));
  }
  return r;
}

void CnfFormula::validate() const {
  if (variable_count < 0) throw std::invalid_argument("negative variable count");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].empty()) {
      throw std::invalid_argument("clause " + std::to_string(i + 1) + " is empty");
    }
    for (int lit : clauses[i]) {
      if (lit == 0 || lit > variable_count || -lit > variable_count) {
        throw std::invalid_argument("literal " + std::to_string(lit) +
                                    " out of range");
      }
    }
  }
}

Reduction cnf_to_relation(const CnfFormula& phi) {
  phi.validate();
  std::vector<std::vector<int>> clauses;
  std::set<int> used;
  for (const auto& clause : phi.clauses) {
    std::vector<int> lits;
    for (int lit : clause) {
      if (std::find(lits.begin(), lits.end(), lit) == lits.end()) {
        lits.push_back(lit);
      }
      used.insert(lit > 0 ? lit : -lit);
    }
    clauses.push_back(std::move(lits));
  }
  const std::vector<int> vars(used.begin(), used.end());

  auto var_name = [](int v) { return "p" + std::to_string(v); };
  auto literal_name = [&](int lit) {
    return (lit > 0 ? "" : "~") + var_name(lit > 0 ? lit : -lit);
  };
  auto pad = [](std::vector<std::string> dom) {
    for (int i = 1; dom.size() < 2; ++i) dom.push_back("_v" + std::to_string(i));
    return dom;
  };
  std::vector<std::string> v_dom, c_dom;
  for (int v : vars) {
    v_dom.push_back(literal_name(v));
    v_dom.push_back(literal_name(-v));
    c_dom.push_back(var_name(v));
  }
  for (std::size_t i = 1; i <= clauses.size(); ++i) {
    c_dom.push_back("c" + std::to_string(i));
  }
  auto schema = std::make_shared<const Schema>(
      std::vector<std::string>{"V", "P", "C"},
      std::vector<std::vector<std::string>>{pad(v_dom), {"+", "-"}, pad(c_dom)});

  Relation r(schema);
  auto lit = [&](int l) { return schema->value(0, literal_name(l)); };
  const Value plus = 0, minus = 1;
  Value c = 0;
  for (int p : vars) {
    for (int q : vars) {
      if (q == p) {
        r.add({kNull, plus, c});
        r.add({kNull, minus, c});
      } else {
        r.add({lit(q), kNull, c});
        r.add({lit(-q), kNull, c});
      }
    }
    ++c;
  }
  for (const auto& clause : clauses) {
    for (int v : vars) {
      bool present = false;
      for (int l : clause) {
        if (l == v || l == -v) {
          r.add({lit(-l), kNull, c});
          present = true;
        }
      }
      if (!present) {
        r.add({lit(v), kNull, c});
        r.add({lit(-v), kNull, c});
      }
    }
    if (clause.size() > 1) r.add({kNull, kNull, c}, clause.size() - 1);
    r.add({kNull, plus, c});
    ++c;
  }
  return {std::move(r), Atom{AttributeSet{0, 1}, AttributeSet{2},
                             Modality::kPossible}};
}

bool sat_via_pia(const CnfFormula& phi) {
  const Reduction red = cnf_to_relation(phi);
  return check_pia(red.relation, red.target.lhs, red.target.rhs).verdict;
}

}  // namespace indepkit
