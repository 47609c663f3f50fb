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

#ifndef DIRSUB_ERRORS_H_
#define DIRSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace dirsub {

// Caller violated a precondition (wrong lattice, inadmissible atom, bad k).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An instance is too large for exhaustive processing.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Numerically degenerate input, e.g. a direction lying inside a subspace.
class DegenerateInputError : public std::domain_error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : std::domain_error(what) {}
};

// User-supplied data failed validation (non-concave rho, malformed files).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace dirsub

#endif  // DIRSUB_ERRORS_H_
