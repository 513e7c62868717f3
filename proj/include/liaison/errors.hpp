/*
   Copyright 2026 The Liaison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIAISON_ERRORS_HPP
#define LIAISON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liaison {

enum class Errc {
    ParseError,
    UnknownVariable,
    RingMismatch,
    ModeMismatch,
    NotHomogeneous,
    UnitIdeal,
    DegreeCapExceeded,
    SizeCapExceeded,
    GenericityFailure,
    ExtOutOfRange,
    Overflow,
    InvalidArgument,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::ModeMismatch: return "ModeMismatch";
        case Errc::NotHomogeneous: return "NotHomogeneous";
        case Errc::UnitIdeal: return "UnitIdeal";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::SizeCapExceeded: return "SizeCapExceeded";
        case Errc::GenericityFailure: return "GenericityFailure";
        case Errc::ExtOutOfRange: return "ExtOutOfRange";
        case Errc::Overflow: return "Overflow";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

/// Single exception type carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace liaison

#endif
