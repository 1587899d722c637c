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

#include "indepkit/relation_io.h"

#include <fstream>
#include <istream>
#include <memory>
#include <set>
#include <sstream>

#include "indepkit/error.h"
#include "json.hpp"

namespace indepkit {
namespace {

using Cells = std::vector<std::string>;

struct CsvRecord {
  Cells cells;
  std::vector<bool> quoted;
  std::size_t line = 0;
};

// RFC 4180 records with double-quote escaping. Blank lines are skipped.
std::vector<CsvRecord> read_csv(std::istream& in) {
  std::vector<CsvRecord> out;
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    CsvRecord rec;
    rec.line = line;
    std::string cell;
    bool quoted = false;
    bool blank = true;
    while (true) {
      if (i >= text.size() || text[i] == '\n' || text[i] == '\r') {
        rec.cells.push_back(cell);
        rec.quoted.push_back(quoted);
        if (i < text.size() && text[i] == '\r') ++i;
        if (i < text.size() && text[i] == '\n') ++i;
        ++line;
        break;
      }
      const char c = text[i];
      if (c == ',') {
        rec.cells.push_back(cell);
        rec.quoted.push_back(quoted);
        cell.clear();
        quoted = false;
        blank = false;
        ++i;
      } else if (c == '"' && cell.empty() && !quoted) {
        quoted = true;
        blank = false;
        ++i;
        while (true) {
          if (i >= text.size()) {
            throw ParseError("unterminated quoted cell", rec.line, 0);
          }
          if (text[i] == '"') {
            if (i + 1 < text.size() && text[i + 1] == '"') {
              cell += '"';
              i += 2;
              continue;
            }
            ++i;
            break;
          }
          if (text[i] == '\n') ++line;
          cell += text[i++];
        }
      } else {
        cell += c;
        blank = false;
        ++i;
      }
    }
    if (!blank) out.push_back(std::move(rec));
  }
  return out;
}

std::string fresh_value(const std::set<std::string>& taken, int& counter) {
  while (true) {
    std::string v = "_v" + std::to_string(++counter);
    if (!taken.count(v)) return v;
  }
}

std::string escape_cell(std::string_view value) {
  if (value == kNullToken) return "\\*";
  if (value.find_first_of(",\"\r\n") == std::string_view::npos &&
      !value.empty()) {
    return std::string(value);
  }
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

DomainMap parse_domains_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("domain file: ") + e.what(), 0, 0);
  }
  if (!doc.is_object()) throw ParseError("domain file must hold an object", 0, 0);
  DomainMap out;
  for (const auto& [name, values] : doc.items()) {
    if (!values.is_array()) {
      throw ParseError("domain of '" + name + "' must be an array", 0, 0);
    }
    auto& dom = out[name];
    for (const auto& v : values) {
      if (v.is_string()) {
        dom.push_back(v.get<std::string>());
      } else if (v.is_number_integer()) {
        dom.push_back(std::to_string(v.get<long long>()));
      } else {
        throw ParseError("domain of '" + name + "' holds a non-string value",
                         0, 0);
      }
    }
  }
  return out;
}

DomainMap load_domains(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  return parse_domains_json(in);
}

Relation read_relation_csv(std::istream& in, const DomainMap& declared) {
  const std::vector<CsvRecord> records = read_csv(in);
  if (records.empty()) throw ParseError("missing header row", 1, 0);
  Cells header = records[0].cells;
  bool has_count = !header.empty() && header.back() == kCountColumn;
  if (has_count) header.pop_back();
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == kCountColumn) {
      throw ParseError("#count must be the last column", records[0].line, c + 1);
    }
  }
  const std::size_t width = header.size();
  for (const auto& [name, _] : declared) {
    if (std::find(header.begin(), header.end(), name) == header.end()) {
      throw SchemaError("domain given for unknown attribute '" + name + "'");
    }
  }

  // Cell texts with null marked as nullopt.
  struct RawRow {
    std::vector<std::optional<std::string>> cells;
    std::uint64_t multiplicity;
  };
  std::vector<RawRow> raw;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    if (rec.cells.size() != width + (has_count ? 1 : 0)) {
      throw ParseError("expected " + std::to_string(width + (has_count ? 1 : 0)) +
                           " cells, found " + std::to_string(rec.cells.size()),
                       rec.line, 0);
    }
    RawRow row;
    row.multiplicity = 1;
    if (has_count) {
      const std::string& text = rec.cells[width];
      std::size_t used = 0;
      unsigned long long m = 0;
      try {
        m = std::stoull(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || text.empty() || text[0] == '-' || m == 0) {
        throw ParseError("bad multiplicity '" + text + "'", rec.line, width + 1);
      }
      row.multiplicity = m;
    }
    for (std::size_t c = 0; c < width; ++c) {
      const std::string& text = rec.cells[c];
      if (!rec.quoted[c] && text == kNullToken) {
        row.cells.push_back(std::nullopt);
      } else if (!rec.quoted[c] && text == "\\*") {
        row.cells.push_back(std::string(kNullToken));
      } else {
        row.cells.push_back(text);
      }
    }
    raw.push_back(std::move(row));
  }

  std::vector<std::vector<std::string>> domains(width);
  for (std::size_t c = 0; c < width; ++c) {
    auto it = declared.find(header[c]);
    if (it != declared.end()) {
      domains[c] = it->second;
      continue;
    }
    std::set<std::string> seen;
    std::uint64_t nulls = 0;
    for (const RawRow& row : raw) {
      if (!row.cells[c]) {
        nulls += row.multiplicity;
      } else if (seen.insert(*row.cells[c]).second) {
        domains[c].push_back(*row.cells[c]);
      }
    }
    int counter = 0;
    while (domains[c].size() < 2) {
      domains[c].push_back(fresh_value(seen, counter));
      seen.insert(domains[c].back());
    }
    for (std::uint64_t k = 0; k < nulls; ++k) {
      domains[c].push_back(fresh_value(seen, counter));
      seen.insert(domains[c].back());
    }
  }

  std::shared_ptr<const Schema> schema;
  try {
    schema = std::make_shared<const Schema>(header, std::move(domains));
  } catch (const SchemaError& e) {
    throw ParseError(e.what(), records[0].line, 0);
  }
  Relation out(schema);
  for (std::size_t r = 0; r < raw.size(); ++r) {
    Tuple t(width);
    for (std::size_t c = 0; c < width; ++c) {
      if (!raw[r].cells[c]) {
        t[c] = kNull;
        continue;
      }
      auto v = schema->find_value(static_cast<int>(c), *raw[r].cells[c]);
      if (!v) {
        throw ParseError("value '" + *raw[r].cells[c] +
                             "' is not in the domain of '" + header[c] + "'",
                         records[r + 1].line, c + 1);
      }
      t[c] = *v;
    }
    out.add(std::move(t), raw[r].multiplicity);
  }
  return out;
}

Relation load_relation(const std::filesystem::path& csv,
                       const std::filesystem::path& domains) {
  std::ifstream in(csv);
  if (!in) throw ParseError("cannot open " + csv.string(), 0, 0);
  DomainMap declared;
  if (!domains.empty()) declared = load_domains(domains);
  return read_relation_csv(in, declared);
}

void write_relation_csv(std::ostream& out, const Relation& r) {
  const Schema& s = r.schema();
  bool with_count = false;
  for (const Row& row : r.rows()) with_count |= row.multiplicity > 1;
  for (int i = 0; i < s.size(); ++i) {
    out << (i ? "," : "") << escape_cell(s.name(i));
  }
  if (with_count) out << ',' << kCountColumn;
  out << '\n';
  for (const Row& row : r.rows()) {
    for (int i = 0; i < s.size(); ++i) {
      if (i) out << ',';
      if (row.values[i] == kNull) {
        out << kNullToken;
      } else {
        out << escape_cell(s.value_name(i, row.values[i]));
      }
    }
    if (with_count) out << ',' << row.multiplicity;
    out << '\n';
  }
}

std::string relation_to_csv(const Relation& r) {
  std::ostringstream out;
  write_relation_csv(out, r);
  return out.str();
}

void write_domains_json(std::ostream& out, const Schema& schema) {
  out << domains_to_json(schema);
}

std::string domains_to_json(const Schema& schema) {
  // Keys in schema order rather than nlohmann's sorted order.
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (int i = 0; i < schema.size(); ++i) doc[schema.name(i)] = schema.domain(i);
  return doc.dump(2) + "\n";
}

}  // namespace indepkit
