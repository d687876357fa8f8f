#include "usp/error.hpp"

namespace usp {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorKind::NotAdjacent: return "NotAdjacent";
        case ErrorKind::GraphMismatch: return "GraphMismatch";
        case ErrorKind::UnknownClassId: return "UnknownClassId";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::WitnessNotFiner: return "WitnessNotFiner";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::PartitionMismatch: return "PartitionMismatch";
        case ErrorKind::NotEquitable: return "NotEquitable";
        case ErrorKind::NotTwoClasses: return "NotTwoClasses";
        case ErrorKind::NotCertifiedUsp: return "NotCertifiedUsp";
        case ErrorKind::NotFiner: return "NotFiner";
        case ErrorKind::IsomorphismFailure: return "IsomorphismFailure";
        case ErrorKind::PreconditionNotMet: return "PreconditionNotMet";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::TooManyClasses: return "TooManyClasses";
    }
    return "Error";
}

} // namespace usp
