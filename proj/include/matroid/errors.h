// Copyright 2026 The Authors.
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

#ifndef MATROID_ERRORS_H_
#define MATROID_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matroid {

class MatroidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A query names an element outside the oracle's domain, or a batch is empty.
class MalformedQueryError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// An operation's precondition does not hold for its arguments.
class DomainError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// Exhaustive enumeration refused because the instance is too large.
class ResourceGuardError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class InvalidContractionError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// A basis-search procedure returned something that is not a basis.
class FaultyOracleError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class IncompleteWeightsError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// Malformed instance or weights file.
class ParseError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

}  // namespace matroid

#endif  // MATROID_ERRORS_H_
