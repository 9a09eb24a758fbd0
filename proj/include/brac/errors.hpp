#pragma once

#include <stdexcept>
#include <string>

namespace brac {

// Two error families, matching the CLI exit-code contract:
//   ValidationError -> exit 2 (bad input, malformed files, out-of-domain values)
//   InfeasibleError -> exit 3 (enumeration caps, unavailable bounds, failed scans)
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidParams : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidIndex : ValidationError {
    using ValidationError::ValidationError;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct DomainError : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct SchemaError : ValidationError {
    using ValidationError::ValidationError;
};

struct NormalizationError : ValidationError {
    using ValidationError::ValidationError;
};

struct CapExceeded : InfeasibleError {
    using InfeasibleError::InfeasibleError;
};

struct BoundUnavailable : InfeasibleError {
    using InfeasibleError::InfeasibleError;
};

struct NoSolution : InfeasibleError {
    using InfeasibleError::InfeasibleError;
};

} // namespace brac
