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

#ifndef PMGREEDY_ERRORS_H_
#define PMGREEDY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace pmgreedy {

// Root of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: out-of-range ids, bad parameters, malformed configs.
class InputError : public Error {
 public:
  using Error::Error;
};

// The set function carries no usable signal for the requested quantity
// (e.g. every marginal is non-positive).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// An exhaustive method would exceed its enumeration budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, double estimate)
      : Error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

// A principal submatrix queried by a determinant oracle is not positive
// definite.
class NotPositiveDefiniteError : public Error {
 public:
  using Error::Error;
};

// Malformed file content. The message carries the line or field location.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmgreedy

#endif  // PMGREEDY_ERRORS_H_
