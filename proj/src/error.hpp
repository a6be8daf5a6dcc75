#pragma once

#include <stdexcept>
#include <string>
#include <cstddef>

namespace lndkit {

enum class ErrorCode {
    ZeroPolynomial,
    NotInSubalgebra,
    NonzeroDivergence,
    NoKernelElementWithinBound,
    NotLocallyNilpotent,
    CapExceeded,
    JacobianNotConstant,
    NotCoordinate,
    ConstantInput,
    RankDeficient,
    NotASquare,
    Degenerate,
    NotClosed,
    ParseError,
    InvalidArgument,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotInSubalgebra: return "NotInSubalgebra";
        case ErrorCode::NonzeroDivergence: return "NonzeroDivergence";
        case ErrorCode::NoKernelElementWithinBound: return "NoKernelElementWithinBound";
        case ErrorCode::NotLocallyNilpotent: return "NotLocallyNilpotent";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::JacobianNotConstant: return "JacobianNotConstant";
        case ErrorCode::NotCoordinate: return "NotCoordinate";
        case ErrorCode::ConstantInput: return "ConstantInput";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::string message, size_t position)
        : Error(ErrorCode::ParseError, std::move(message)), position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;  // 0-based byte offset into the input
};

}  // namespace lndkit
