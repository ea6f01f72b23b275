// Copyright 2026 The dsplab Authors
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

#ifndef DSPLAB_ERROR_HPP
#define DSPLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dsplab {

// Base class for every domain error raised by the library. The CLI maps these
// to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance, partition, profile or document.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed a configured limit.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (e.g. a non-local-expert
// mediator handed to the local-experts solver).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace dsplab

#endif  // DSPLAB_ERROR_HPP
