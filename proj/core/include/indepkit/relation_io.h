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

// Relation files.
//
// CSV: the first row holds attribute names. An optional final column named
// `#count` gives the multiplicity of the row (default 1). A cell `*` is the
// null marker; `\*` is a literal asterisk. Duplicate rows are merged.
//
// Domain sidecar: a JSON object mapping attribute name to an array of
// non-null value strings. Attributes without an entry get an inferred
// domain: the observed values, padded with synthetic `_v1`, `_v2`, ... up to
// at least two values, plus one more synthetic value per null cell.

#ifndef INDEPKIT_RELATION_IO_H_
#define INDEPKIT_RELATION_IO_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "indepkit/relation.h"

namespace indepkit {

using DomainMap = std::map<std::string, std::vector<std::string>>;

inline constexpr std::string_view kCountColumn = "#count";

DomainMap parse_domains_json(std::istream& in);
DomainMap load_domains(const std::filesystem::path& path);

Relation read_relation_csv(std::istream& in, const DomainMap& declared = {});
Relation load_relation(const std::filesystem::path& csv,
                       const std::filesystem::path& domains = {});

// Writes the `#count` column only when some multiplicity exceeds 1.
void write_relation_csv(std::ostream& out, const Relation& r);
std::string relation_to_csv(const Relation& r);

void write_domains_json(std::ostream& out, const Schema& schema);
std::string domains_to_json(const Schema& schema);

}  // namespace indepkit

#endif  // INDEPKIT_RELATION_IO_H_
