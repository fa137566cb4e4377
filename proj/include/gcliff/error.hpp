// Copyright 2026 The gcliff Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcliff {

enum class ErrorCode {
    InvalidArgument,
    GroupMismatch,
    NotInvertible,
    NotExtendable,
    NotSymplectic,
    InternalReductionFailure,
    DegenerateForm,
    IncompleteTable,
    PreconditionFailed,
    NonClifford,
    CapExceeded,
    ParseError,
};

const char *error_code_name(ErrorCode code);

/// Base exception for every failure raised by the library. The code is stable
/// and is what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

   private:
    ErrorCode code_;
};

/// Raised when a homomorphism has no two-sided inverse. `witness` is a target
/// element with no preimage.
class NotInvertibleError : public Error {
   public:
    NotInvertibleError(const std::string &what, std::vector<int64_t> witness)
        : Error(ErrorCode::NotInvertible, what), witness_(std::move(witness)) {}
    const std::vector<int64_t> &witness() const { return witness_; }

   private:
    std::vector<int64_t> witness_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string &what) {
    if (!cond) {
        throw Error(code, what);
    }
}

}  // namespace gcliff
