// Copyright 2026 The dimerlab Authors.
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

#ifndef DIMERLAB_ERRORS_HPP
#define DIMERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dimerlab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimensions : public Error {
 public:
  using Error::Error;
};

// An operation was asked to run past its practical size cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

// The evaluator handed to interpolation is not an integer homogeneous
// polynomial of the announced degree.
class InterpolationMismatch : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class PropositionViolation : public Error {
 public:
  using Error::Error;
};

class NonPositiveWeights : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dimerlab

#endif  // DIMERLAB_ERRORS_HPP
