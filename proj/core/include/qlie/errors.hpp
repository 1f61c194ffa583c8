// Copyright 2026 The qlie authors
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

namespace qlie {

/** Base class for all qlie errors. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Operands act on different qubit counts. */
class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

/** Malformed or invalid input (files, expressions, option combinations). */
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/** An exact coefficient grew past the configured bit budget. */
class OverflowGuard : public Error {
 public:
  explicit OverflowGuard(const std::string& what) : Error(what) {}
};

/** A bounded search (symmetry detection, subset enumeration) ran out of budget. */
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

}  // namespace qlie
