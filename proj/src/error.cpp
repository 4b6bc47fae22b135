#include "toromotive/error.hpp"

namespace toromotive {

std::string_view error_kind_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidRank: return "InvalidRank";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::GroupTooLarge: return "GroupTooLarge";
        case ErrorKind::ZeroVector: return "ZeroVector";
        case ErrorKind::NotSimplicial: return "NotSimplicial";
        case ErrorKind::NotFullDimensional: return "NotFullDimensional";
        case ErrorKind::NotSmooth: return "NotSmooth";
        case ErrorKind::NotComplete: return "NotComplete";
        case ErrorKind::MalformedFan: return "MalformedFan";
        case ErrorKind::RayOutsideSupport: return "RayOutsideSupport";
        case ErrorKind::NotRefinement: return "NotRefinement";
        case ErrorKind::FanNotAdmissible: return "FanNotAdmissible";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::BadDegree: return "BadDegree";
        case ErrorKind::NotDecomposable: return "NotDecomposable";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    }
    return "Unknown";
}

}  // namespace toromotive
