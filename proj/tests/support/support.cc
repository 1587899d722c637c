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

#include "support.h"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "indepkit/relation_io.h"

namespace indepkit::testing {
namespace {

std::vector<Tuple> copies_of(const Relation& r) {
  std::vector<Tuple> out;
  for (const Row& row : r.rows()) {
    for (std::uint64_t i = 0; i < row.multiplicity; ++i) out.push_back(row.values);
  }
  return out;
}

bool ground(const Schema& s, std::vector<Tuple>& copies, std::size_t cell,
            const std::function<bool(const std::vector<Tuple>&)>& fn) {
  const std::size_t width = static_cast<std::size_t>(s.size());
  const std::size_t total = copies.size() * width;
  while (cell < total && copies[cell / width][cell % width] != kNull) ++cell;
  if (cell == total) return fn(copies);
  const std::size_t row = cell / width;
  const int col = static_cast<int>(cell % width);
  for (Value v = 0; v < s.domain_size(col); ++v) {
    copies[row][col] = v;
    const bool go_on = ground(s, copies, cell + 1, fn);
    copies[row][col] = kNull;
    if (!go_on) return false;
  }
  return true;
}

std::string strip_latex(std::string cell) {
  static const std::regex emph(R"(\\(emph|textit|mathit)\{([^}]*)\})");
  cell = std::regex_replace(cell, emph, "$2");
  cell.erase(std::remove(cell.begin(), cell.end(), '$'), cell.end());
  const auto first = cell.find_first_not_of(" \t\n");
  if (first == std::string::npos) return "";
  cell = cell.substr(first, cell.find_last_not_of(" \t\n") - first + 1);
  return cell;
}

}  // namespace

void for_each_grounding(const Relation& r,
                        const std::function<bool(const std::vector<Tuple>&)>& fn) {
  std::vector<Tuple> copies = copies_of(r);
  ground(r.schema(), copies, 0, fn);
}

std::uint64_t enumerate_count(const Relation& r) {
  std::uint64_t n = 0;
  for_each_grounding(r, [&](const std::vector<Tuple>&) {
    ++n;
    return true;
  });
  return n;
}

bool ref_ia(const std::vector<Tuple>& copies, AttributeSet x, AttributeSet y) {
  std::set<std::vector<Value>> xs, ys, pairs;
  for (const Tuple& t : copies) {
    std::vector<Value> a, b;
    for (int p : x.positions()) a.push_back(t[p]);
    for (int p : y.positions()) b.push_back(t[p]);
    if (std::count(a.begin(), a.end(), kNull) || std::count(b.begin(), b.end(), kNull)) {
      return false;
    }
    std::vector<Value> ab = a;
    ab.push_back(-2);
    ab.insert(ab.end(), b.begin(), b.end());
    xs.insert(a);
    ys.insert(b);
    pairs.insert(ab);
  }
  return pairs.size() == xs.size() * ys.size();
}

bool ref_ia(const Relation& r, AttributeSet x, AttributeSet y) {
  return ref_ia(copies_of(r), x, y);
}

bool ref_pia(const Relation& r, AttributeSet x, AttributeSet y) {
  bool found = false;
  for_each_grounding(r, [&](const std::vector<Tuple>& g) {
    found = ref_ia(g, x, y);
    return !found;
  });
  return found;
}

bool ref_cia(const Relation& r, AttributeSet x, AttributeSet y) {
  bool all = true;
  for_each_grounding(r, [&](const std::vector<Tuple>& g) {
    all = ref_ia(g, x, y);
    return all;
  });
  return all;
}

bool ref_satisfies(const Relation& r, const Atom& a) {
  switch (a.modality) {
    case Modality::kPlain:
      return ref_ia(r, a.lhs, a.rhs);
    case Modality::kPossible:
      return ref_pia(r, a.lhs, a.rhs);
    case Modality::kCertain:
      return ref_cia(r, a.lhs, a.rhs);
  }
  return false;
}

bool brute_force_sat(const CnfFormula& phi) {
  const int n = phi.variable_count;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const bool ok = std::all_of(phi.clauses.begin(), phi.clauses.end(),
                                [&](const std::vector<int>& clause) {
                                  return std::any_of(clause.begin(), clause.end(), [&](int lit) {
                                    const bool value = (s >> (std::abs(lit) - 1)) & 1U;
                                    return lit > 0 ? value : !value;
                                  });
                                });
    if (ok) return true;
  }
  return false;
}

std::shared_ptr<const Schema> letters_schema(int n, int domain_size) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));
  return std::make_shared<const Schema>(Schema::uniform(names, domain_size));
}

Relation random_relation(Rng& rng, const RelationParams& p) {
  std::uniform_int_distribution<int> attrs(1, p.max_attributes);
  std::uniform_int_distribution<int> dom(2, p.max_domain);
  std::uniform_int_distribution<int> distinct(1, p.max_distinct);
  std::uniform_int_distribution<int> mult(1, p.max_multiplicity);
  std::bernoulli_distribution null(p.null_probability);
  while (true) {
    const int n = attrs(rng);
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> domains;
    for (int i = 0; i < n; ++i) {
      names.emplace_back(1, static_cast<char>('A' + i));
      std::vector<std::string> d;
      const int size = dom(rng);
      for (int v = 0; v < size; ++v) d.push_back(std::to_string(v));
      domains.push_back(d);
    }
    auto schema = std::make_shared<const Schema>(names, domains);
    Relation r(schema);
    const int rows = distinct(rng);
    for (int i = 0; i < rows; ++i) {
      Tuple t(n);
      for (int a = 0; a < n; ++a) {
        t[a] = null(rng) ? kNull
                         : std::uniform_int_distribution<Value>(0, schema->domain_size(a) - 1)(rng);
      }
      r.add(t, static_cast<std::uint64_t>(mult(rng)));
    }
    if (r.distinct_size() <= static_cast<std::size_t>(p.max_distinct) &&
        count_groundings(r) <= p.max_groundings) {
      return r;
    }
  }
}

AttributeSet random_subset(Rng& rng, AttributeSet universe, double p) {
  std::bernoulli_distribution pick(p);
  AttributeSet out;
  for (int a : universe.positions()) {
    if (pick(rng)) out.insert(a);
  }
  return out;
}

AttributeSet random_nonempty_subset(Rng& rng, AttributeSet universe) {
  while (true) {
    const AttributeSet s = random_subset(rng, universe);
    if (!s.empty() || universe.empty()) return s;
  }
}

Atom random_atom(Rng& rng, int attributes, Modality m, bool disjoint,
                 bool nonempty) {
  const AttributeSet all = AttributeSet::first(attributes);
  while (true) {
    AttributeSet x = nonempty ? random_nonempty_subset(rng, all) : random_subset(rng, all);
    AttributeSet rest = disjoint ? all - x : all;
    if (nonempty && rest.empty()) continue;
    AttributeSet y = nonempty ? random_nonempty_subset(rng, rest) : random_subset(rng, rest);
    return {x, y, m};
  }
}

CnfFormula random_cnf(Rng& rng, int max_variables, int max_clauses,
                      int max_width) {
  CnfFormula phi;
  phi.variable_count = std::uniform_int_distribution<int>(1, max_variables)(rng);
  const int m = std::uniform_int_distribution<int>(1, max_clauses)(rng);
  std::uniform_int_distribution<int> var(1, phi.variable_count);
  std::uniform_int_distribution<int> width(1, max_width);
  std::bernoulli_distribution negate(0.5);
  for (int i = 0; i < m; ++i) {
    std::vector<int> clause;
    const int w = width(rng);
    for (int j = 0; j < w; ++j) clause.push_back(negate(rng) ? -var(rng) : var(rng));
    phi.clauses.push_back(clause);
  }
  return phi;
}

std::vector<std::vector<std::string>> latex_table(const std::string& path,
                                                  const std::string& label) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto at = text.find("\\label{" + label + "}");
  if (at == std::string::npos) throw std::runtime_error("no label " + label);
  auto begin = text.find("\\begin{tabular}", at);
  begin = text.find('}', text.find('{', begin + 15)) + 1;
  const auto end = text.find("\\end{tabular}", begin);
  const std::string body = text.substr(begin, end - begin);

  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < body.size()) {
    auto next = body.find("\\\\", pos);
    if (next == std::string::npos) next = body.size();
    std::string line = body.substr(pos, next - pos);
    pos = next + 2;
    for (const char* cmd : {"\\hline", "\\cline"}) {
      const auto h = line.find(cmd);
      if (h != std::string::npos) line.erase(h, line.find_first_of("\n", h) - h);
    }
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '&')) cells.push_back(strip_latex(cell));
    if (cells.size() < 2) continue;
    if (rows.empty()) {
      for (std::string& c : cells) c = c.substr(0, c.find('('));
    }
    rows.push_back(cells);
  }
  return rows;
}

Relation relation_from_text(const std::string& csv) {
  std::istringstream in(csv);
  return read_relation_csv(in);
}

}  // namespace indepkit::testing
