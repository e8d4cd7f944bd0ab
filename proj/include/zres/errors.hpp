#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zres {

enum class ErrorKind {
    BadShape,
    NonPositiveBound,
    OrderingViolated,
    SingularGenerators,
    PointOutOfRange,
    NotClosed,
    UnsupportedFormat,
    NotPrime,
    Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace zres
