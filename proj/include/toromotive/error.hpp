#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toromotive {

enum class ErrorKind {
    InvalidRank,
    DimensionMismatch,
    GroupTooLarge,
    ZeroVector,
    NotSimplicial,
    NotFullDimensional,
    NotSmooth,
    NotComplete,
    MalformedFan,
    RayOutsideSupport,
    NotRefinement,
    FanNotAdmissible,
    NotPrime,
    BadDegree,
    NotDecomposable,
    Overflow,
    InvalidPolynomial,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// that callers (the CLI, the Python module) can report it structurally.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view kind_name() const noexcept { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace toromotive
