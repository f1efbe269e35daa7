// Copyright 2026 The eqlearn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQLEARN_ERRORS_HPP
#define EQLEARN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace eqlearn {

/// Raised when a request exceeds a configured resource cap (e.g. qubit count).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an iterative solver fails to converge. Carries the best
/// diagnostic reached (residual norm for eigensolvers, duality gap for lasso).
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double diagnostic)
      : std::runtime_error(what), diagnostic_(diagnostic) {}
  double diagnostic() const { return diagnostic_; }

 private:
  double diagnostic_;
};

/// Raised for inconsistent experiment configuration (missing models, bad
/// config files, unwritable paths).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eqlearn

#endif  // EQLEARN_ERRORS_HPP
