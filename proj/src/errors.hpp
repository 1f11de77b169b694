// Copyright 2026 The spanscore Authors
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

#ifndef SPANSCORE_ERRORS_HPP
#define SPANSCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spanscore {

// Bad configuration: unknown measure names, malformed flags, invalid
// parameters. Maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or invalid input data, and data-dependent operation failures
// such as an exceeded enumeration budget. Maps to exit code 2.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A connected component of the overlap graph (or an oracle instance) is too
// large to enumerate within the configured budget.
class BudgetError : public DataError {
 public:
  explicit BudgetError(const std::string& what) : DataError(what) {}
};

// A violated internal invariant. Maps to exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace spanscore

#endif  // SPANSCORE_ERRORS_HPP
