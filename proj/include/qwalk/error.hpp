// Copyright 2026 The qwalk Authors
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

namespace qwalk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition was violated (bad size parameter, out-of-range index, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// The requested simulation would exceed the configured amplitude cap.
class SizeCapExceeded : public Error {
  public:
    using Error::Error;
};

/// The family/size combination has no circuit construction.
class NotCompilable : public Error {
  public:
    using Error::Error;
};

/// Lowering needed more clean ancilla qubits than the layout provides.
class AncillaBudgetExceeded : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qwalk
