// Copyright 2026 The ucoh Authors
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

namespace ucoh {

/// Categories surfaced through the C API as error codes.
enum class ErrorKind {
    Validation = 1,   // malformed input: non-Hermitian, non-unit vector, bad dims
    Domain,           // parameter outside an admissible (alpha, beta) region
    NotAState,        // eigenvalue below the clamp threshold, bad trace
    Support,          // supp(rho) not contained in supp(sigma)
    Schema,           // frame file does not match the expected layout
    Io,
    Uncertified,      // ensemble failed (or never passed) certification
    Violation,        // a checked inequality did not hold
    Discrepancy,      // closed-form transcription disagrees with the pipeline
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

#define UCOH_DEFINE_ERROR(Name, Kind)                                     \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
    };

UCOH_DEFINE_ERROR(ValidationError, Validation)
UCOH_DEFINE_ERROR(DomainError, Domain)
UCOH_DEFINE_ERROR(NotAStateError, NotAState)
UCOH_DEFINE_ERROR(SupportError, Support)
UCOH_DEFINE_ERROR(SchemaError, Schema)
UCOH_DEFINE_ERROR(IoError, Io)
UCOH_DEFINE_ERROR(UncertifiedError, Uncertified)
UCOH_DEFINE_ERROR(ViolationError, Violation)
UCOH_DEFINE_ERROR(DiscrepancyError, Discrepancy)
UCOH_DEFINE_ERROR(InternalError, Internal)

#undef UCOH_DEFINE_ERROR

}  // namespace ucoh
