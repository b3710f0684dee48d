// Copyright the hamspace authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>

namespace hamspace {

// Error taxonomy mirrors the CLI exit-code table:
//   UsageError -> 2, FormatError -> 3, ContractError -> 4, NumericError -> 5.

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or unreadable input files.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented invariant was violated at runtime (e.g. index result differs
// from the linear-scan oracle).
struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite loss or other numeric breakdown.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hamspace
