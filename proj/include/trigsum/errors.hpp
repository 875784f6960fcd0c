#pragma once

#include <stdexcept>
#include <string>

namespace trigsum {

enum class ErrorKind {
    InvalidPrecision,
    InvalidModulus,
    SingularTerm,
    UnsupportedIdentity,
    HypothesisViolated,
    Coprimality,
    NearSingular,
    Contour,
    Truncation,
    Usage,
    Parse,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidPrecision: return "invalid-precision";
        case ErrorKind::InvalidModulus: return "invalid-modulus";
        case ErrorKind::SingularTerm: return "singular-term";
        case ErrorKind::UnsupportedIdentity: return "unsupported-identity";
        case ErrorKind::HypothesisViolated: return "hypothesis-violated";
        case ErrorKind::Coprimality: return "coprimality";
        case ErrorKind::NearSingular: return "near-singular";
        case ErrorKind::Contour: return "contour";
        case ErrorKind::Truncation: return "truncation";
        case ErrorKind::Usage: return "usage";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

}  // namespace trigsum
