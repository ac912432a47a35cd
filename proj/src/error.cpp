#include "archcalc/error.hpp"

namespace archcalc {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
    case ErrorCode::SubsetNotInUniverse: return "SUBSET_NOT_IN_UNIVERSE";
    case ErrorCode::NotASubset: return "NOT_A_SUBSET";
    case ErrorCode::DuplicateView: return "DUPLICATE_VIEW";
    case ErrorCode::NotBnc: return "NOT_BNC";
    case ErrorCode::EmptyUniverse: return "EMPTY_UNIVERSE";
    case ErrorCode::NotAPartition: return "NOT_A_PARTITION";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::SearchBudgetExceeded: return "SEARCH_BUDGET_EXCEEDED";
    case ErrorCode::NotComposable: return "NOT_COMPOSABLE";
    case ErrorCode::NotSingleRelationBnc: return "NOT_SINGLE_RELATION_BNC";
    case ErrorCode::JunctionShapeMismatch: return "JUNCTION_SHAPE_MISMATCH";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line), column_(column), detail_(message)
{
}

} // namespace archcalc
