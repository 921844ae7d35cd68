#include "hecke/error.hpp"

namespace hecke {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NonExactDivision: return "NonExactDivision";
        case ErrorKind::NonIntegralQuotient: return "NonIntegralQuotient";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::NotKleshchev: return "NotKleshchev";
        case ErrorKind::BadConfig: return "BadConfig";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotAcyclic: return "NotAcyclic";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::NonParallelRelation: return "NonParallelRelation";
        case ErrorKind::NotStringAlgebra: return "NotStringAlgebra";
        case ErrorKind::ExcludedModule: return "ExcludedModule";
        case ErrorKind::TooFewPoints: return "TooFewPoints";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::NotACore: return "NotACore";
        case ErrorKind::BadWeight: return "BadWeight";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

}  // namespace hecke
