#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trigsum/numeric.hpp"

namespace trigsum {

/// One identity instance: both sides, absolute difference, tolerance, verdict.
/// lhs/rhs hold decimal strings (or exact "n/d" strings when exact = true).
struct CheckReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::string lhs;
    std::string rhs;
    std::string abs_diff;
    std::string tolerance;
    bool pass = false;
    bool exact = false;
    bool skipped = false;
    std::string note;

    static CheckReport numeric(const PrecisionContext& ctx, std::string identity,
                               std::vector<std::pair<std::string, std::string>> params,
                               const HighComplex& lhs, const HighComplex& rhs,
                               std::string note = "");
    static CheckReport exact_rational(std::string identity,
                                      std::vector<std::pair<std::string, std::string>> params,
                                      const Rational& lhs, const Rational& rhs,
                                      std::string note = "");
    static CheckReport skipped_hypothesis(std::string identity,
                                          std::vector<std::pair<std::string, std::string>> params,
                                          std::string reason);
};

std::string param_str(long v);

}  // namespace trigsum
