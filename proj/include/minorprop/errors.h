// Copyright 2026 The minorprop Authors
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

#ifndef MINORPROP_ERRORS_H_
#define MINORPROP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace minorprop {

// Base for every error raised by this library.
class MinorpropError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of a public function does not hold.
class PreconditionError : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// The oracle's query budget would be exceeded by the current query.
class BudgetExhausted : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// Graph or tree text could not be parsed, or describes an invalid object.
class FormatError : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// An exact oracle was asked to solve an instance above its size limit.
class InstanceTooLarge : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// A walk collision handed to cycle extraction is not a valid collision.
class MalformedWalk : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// A sampler hit its attempt cap without producing a sample.
class SamplingFailed : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

// An internal postcondition failed. Always a bug.
class InternalError : public MinorpropError {
 public:
  using MinorpropError::MinorpropError;
};

}  // namespace minorprop

#endif  // MINORPROP_ERRORS_H_
