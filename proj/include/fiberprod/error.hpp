#ifndef FIBERPROD_ERROR_HPP
#define FIBERPROD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fiberprod {

enum class ErrorKind {
    InvalidArgument,
    MalformedInput,
    NotEllipticSurface,
    RequiresMinimalModel,
    NonReducedFiber,
    NoSmallResolution,
    Unsupported,
    PreconditionViolation,
    InternalInconsistency,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::NotEllipticSurface: return "not-an-elliptic-surface";
    case ErrorKind::RequiresMinimalModel: return "requires-minimal-model";
    case ErrorKind::NonReducedFiber: return "non-reduced-fiber";
    case ErrorKind::NoSmallResolution: return "no-small-resolution";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::InternalInconsistency: return "internal-inconsistency";
    }
    return "unknown";
}

/// Process exit status used by the command-line tool for each error kind.
inline int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::InvalidArgument: return 2;
    case ErrorKind::NotEllipticSurface:
    case ErrorKind::RequiresMinimalModel: return 3;
    case ErrorKind::NonReducedFiber: return 4;
    case ErrorKind::NoSmallResolution: return 5;
    case ErrorKind::Unsupported: return 6;
    case ErrorKind::PreconditionViolation:
    case ErrorKind::InternalInconsistency: return 1;
    }
    return 1;
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace fiberprod

#endif
