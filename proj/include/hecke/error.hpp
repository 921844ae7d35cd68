#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

enum class ErrorKind {
    Parse,
    NonExactDivision,
    NonIntegralQuotient,
    SizeMismatch,
    NotKleshchev,
    BadConfig,
    Disconnected,
    NotAcyclic,
    DimensionMismatch,
    NotAdmissible,
    NonParallelRelation,
    NotStringAlgebra,
    ExcludedModule,
    TooFewPoints,
    BadRank,
    NotACore,
    BadWeight,
    Internal,
};

const char* error_kind_name(ErrorKind k);

/// Every domain failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hecke
