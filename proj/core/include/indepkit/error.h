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

#ifndef INDEPKIT_ERROR_H_
#define INDEPKIT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace indepkit {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unknown attribute, duplicate attribute, value outside a domain, ...
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// The query lies outside the fragment an operation is defined for
// (wrong modality, non-disjoint atom, conclusion outside PIA*, ...).
class ScopeError : public Error {
 public:
  using Error::Error;
};

// A configured size limit would be exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// The grounding oracle was asked to enumerate more groundings than allowed.
class OracleInfeasible : public LimitError {
 public:
  using LimitError::LimitError;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace indepkit

#endif  // INDEPKIT_ERROR_H_
