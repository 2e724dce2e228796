// Copyright 2026 The dqc1k Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dqc1 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A gate matrix is not unitary within tolerance.
class UnitarityError : public Error {
   public:
    using Error::Error;
};

/// A qubit reference is out of range, repeated, or overlaps another register.
class WiringError : public Error {
   public:
    using Error::Error;
};

/// An operation precondition does not hold.
class ContractError : public Error {
   public:
    using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
   public:
    using Error::Error;
};

/// A circuit document is malformed. `where` names the offending location.
class ParseError : public Error {
   public:
    ParseError(std::string where, const std::string &what)
        : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}
    const std::string &where() const noexcept { return where_; }

   private:
    std::string where_;
};

/// A well-formed document describes a circuit that violates an invariant.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// Conditioning on an event of probability zero.
class PostselectionImpossibleError : public Error {
   public:
    using Error::Error;
};

}  // namespace dqc1
