// Copyright 2026 The readk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READK_ERRORS_H_
#define READK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace readk {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data: unnormalized probabilities, bad truth tables, etc.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Well-formed arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Enumeration guard exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace readk

#endif  // READK_ERRORS_H_
