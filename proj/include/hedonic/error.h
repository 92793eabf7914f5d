// Copyright 2026 The Hedonic Mechanisms Authors.
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

#ifndef HEDONIC_ERROR_H_
#define HEDONIC_ERROR_H_

#include <stdexcept>
#include <string>

namespace hedonic {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: invalid profiles, class mismatches, bad parameters,
// unparsable instance files.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine was asked for an instance beyond its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace hedonic

#endif  // HEDONIC_ERROR_H_
