// Copyright 2026 The uniperturb Authors.
//
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

#ifndef UNIPERTURB_ERRORS_HPP_
#define UNIPERTURB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniperturb {

// Base for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed Unicode data file. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Position outside the valid range for an operation.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Payload not drawn from the configured alphabet / confusables map.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid argument (empty payload, string too short, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// The requested attack cannot be expressed on this input at all
// (e.g. homoglyph attack on a string with no confusable characters).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Bad optimizer / model configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A target model failed to evaluate a candidate.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// The adapter wire protocol was violated (bad id, bad schema, ...).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace uniperturb

#endif  // UNIPERTURB_ERRORS_HPP_
