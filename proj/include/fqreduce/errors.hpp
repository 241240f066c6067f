/*
   Copyright 2026 The fqreduce Authors

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

#ifndef FQREDUCE_ERRORS_HPP
#define FQREDUCE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fqr {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched fields, wrong dimensions, ...).
class UsageError : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero in finite field") {}
};

class NotAProjectivePoint : public Error {
   public:
    NotAProjectivePoint() : Error("the all-zero vector is not a projective point") {}
};

/// An enumeration or exhaustive sweep would exceed its configured cap.
class ResourceLimit : public Error {
   public:
    using Error::Error;
};

/// Syntax error in a field literal, polynomial or system file.
/// Line and column are 1-based; line 0 means "not line oriented".
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(format(what, line, column)), line_(line), column_(column), message_(what) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

   private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        if (line == 0) return "column " + std::to_string(column) + ": " + what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// A reduction step could not be completed. `step()` is 1-based.
class ReductionFailure : public Error {
   public:
    ReductionFailure(const std::string& what, std::size_t step)
        : Error("step " + std::to_string(step) + ": " + what), step_(step), detail_(what) {}

    std::size_t step() const noexcept { return step_; }
    /// Message without the step prefix.
    const std::string& detail() const noexcept { return detail_; }

   private:
    std::size_t step_;
    std::string detail_;
};

/// Every rank-m RREF matrix is already used by some value column.
class NoFreeMatrix : public ReductionFailure {
   public:
    using ReductionFailure::ReductionFailure;
};

/// Projective reduction failed on a system whose zero set is empty.
class EmptyProjectiveZeroSet : public NoFreeMatrix {
   public:
    using NoFreeMatrix::NoFreeMatrix;
};

/// Strict mode: |X| exceeds the cardinality bound at some step.
class BoundViolation : public ReductionFailure {
   public:
    using ReductionFailure::ReductionFailure;
};

/// An oracle disagreed with a computed result. Indicates a bug.
class VerificationFailure : public Error {
   public:
    using Error::Error;
};

}  // namespace fqr

#endif  // FQREDUCE_ERRORS_HPP
