#pragma once

#include <stdexcept>
#include <string>

namespace usp {

enum class ErrorKind {
    DuplicateEdge,
    LoopEdge,
    Disconnected,
    VertexOutOfRange,
    NotAdjacent,
    GraphMismatch,
    UnknownClassId,
    InvalidArgument,
    WitnessNotFiner,
    InternalInconsistency,
    PartitionMismatch,
    NotEquitable,
    NotTwoClasses,
    NotCertifiedUsp,
    NotFiner,
    IsomorphismFailure,
    PreconditionNotMet,
    BudgetExceeded,
    ParseError,
    TooManyClasses,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace usp
