#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace archcalc {

enum class ErrorCode {
    ParseError,
    SchemaError,
    SubsetNotInUniverse,
    NotASubset,
    DuplicateView,
    NotBnc,
    EmptyUniverse,
    NotAPartition,
    IndexOutOfRange,
    SearchBudgetExceeded,
    NotComposable,
    NotSingleRelationBnc,
    JunctionShapeMismatch,
    InvalidArgument,
};

/// Stable upper-case spelling used in diagnostics, e.g. "NOT_A_PARTITION".
const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Positioned syntax error. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string detail_;
};

} // namespace archcalc
