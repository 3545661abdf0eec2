// Copyright 2026 The cliffmq Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffmq {

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular over GF(2)") {
    }
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonSymmetricXi : std::invalid_argument {
    NonSymmetricXi() : std::invalid_argument("xi must be symmetric") {
    }
};

struct NonLinearGate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SymplecticMismatch : std::invalid_argument {
    SymplecticMismatch() : std::invalid_argument("symplectic matrices differ") {
    }
};

struct TooManyQubits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DegenerateFit : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Circuit text parse failure. `line()` is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

struct XiNotSymmetric : ParseError {
    explicit XiNotSymmetric(std::size_t line) : ParseError(line, "xi is not symmetric") {
    }
};

struct QubitOutOfRange : ParseError {
    QubitOutOfRange(std::size_t line, std::size_t q) : ParseError(line, "qubit " + std::to_string(q) + " out of range") {
    }
};

}  // namespace cliffmq
