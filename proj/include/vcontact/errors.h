// Copyright 2026 The vContact Authors
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

#ifndef VCONTACT_ERRORS_H_
#define VCONTACT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace vcontact {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's precondition (malformed MAC, bad config, ...).
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// Not enough observations to build the requested artifact.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Serialized profile bytes are malformed or violate a type invariant.
class ParseError : public Error {
 public:
  ParseError(int line, std::string field, const std::string& message)
      : Error("line " + std::to_string(line) + ": field '" + field +
              "': " + message),
        line_(line),
        field_(std::move(field)) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

}  // namespace vcontact

#endif  // VCONTACT_ERRORS_H_
