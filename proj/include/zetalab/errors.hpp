// Copyright 2026 The zetalab Authors.
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

#ifndef ZETALAB_ERRORS_HPP
#define ZETALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetalab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series inversion needs a constant term that is a nonzero rational.
class NonUnitConstantTerm : public Error {
 public:
  using Error::Error;
};

/// series_log needs constant term exactly 1.
class ConstantTermNotOne : public Error {
 public:
  using Error::Error;
};

/// series_exp needs constant term exactly 0.
class NonzeroConstantTerm : public Error {
 public:
  using Error::Error;
};

/// An edge was handed to a truncated operator outside its truncation.
class OutsideTruncation : public Error {
 public:
  using Error::Error;
};

class InvalidTruncation : public Error {
 public:
  using Error::Error;
};

/// Raised by exact elimination when a pivot is not a unit. The matrices built
/// here are congruent to the identity mod u, so this signals a bug.
class SingularLeadingMinor : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetalab

#endif  // ZETALAB_ERRORS_HPP
