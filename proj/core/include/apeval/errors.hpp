// Copyright 2026 the apeval authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace apeval {

/// Base class of all apeval errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The caller handed us something malformed: bad labels, non-finite scores,
/// out-of-domain parameters. Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The data are structurally incapable of supporting the requested
/// computation (e.g. a single-class dataset). Maps to CLI exit code 3.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class EmptyDataset : public InputError {
 public:
  EmptyDataset() : InputError("dataset is empty") {}
};

class NonBinaryLabel : public InputError {
 public:
  explicit NonBinaryLabel(const std::string& msg) : InputError(msg) {}
};

class NonFiniteScore : public InputError {
 public:
  explicit NonFiniteScore(const std::string& msg) : InputError(msg) {}
};

class InvalidPrevalence : public InputError {
 public:
  explicit InvalidPrevalence(const std::string& msg) : InputError(msg) {}
};

class InvalidCorrelation : public InputError {
 public:
  explicit InvalidCorrelation(const std::string& msg) : InputError(msg) {}
};

/// A scalar argument fell outside its documented domain.
class DomainError : public InputError {
 public:
  explicit DomainError(const std::string& msg) : InputError(msg) {}
};

/// A quasi-concave model constraint was violated; the message names the
/// inequality that failed.
class ModelConstraintError : public InputError {
 public:
  explicit ModelConstraintError(const std::string& msg) : InputError(msg) {}
};

/// n1 = 0 or n0 = 0 where both classes are required.
class DegenerateClass : public DegenerateError {
 public:
  explicit DegenerateClass(const std::string& msg) : DegenerateError(msg) {}
};

/// AUC = 1/2 exactly: the momentum estimate divides by 2*AUC - 1 and is
/// undefined for a random-looking test.
class RandomDenominator : public DegenerateError {
 public:
  RandomDenominator()
      : DegenerateError("beta_hat undefined: AUC equals 1/2 exactly") {}
};

/// A simulation scenario that cannot produce at least one subject per class.
class DegenerateScenario : public DegenerateError {
 public:
  explicit DegenerateScenario(const std::string& msg) : DegenerateError(msg) {}
};

}  // namespace apeval
