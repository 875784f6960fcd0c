#include "trigsum/check.hpp"

namespace trigsum {

std::string param_str(long v) { return std::to_string(v); }

CheckReport CheckReport::numeric(const PrecisionContext& ctx, std::string identity,
                                 std::vector<std::pair<std::string, std::string>> params,
                                 const HighComplex& lhs, const HighComplex& rhs,
                                 std::string note) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    BigFloat diff = (lhs - rhs).abs();
    r.abs_diff = diff.str();
    r.tolerance = ctx.tolerance.str();
    r.pass = approx_equal(ctx, lhs, rhs);
    r.note = std::move(note);
    return r;
}

CheckReport CheckReport::exact_rational(std::string identity,
                                        std::vector<std::pair<std::string, std::string>> params,
                                        const Rational& lhs, const Rational& rhs,
                                        std::string note) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.abs_diff = (lhs - rhs).abs().str();
    r.tolerance = "0";
    r.pass = (lhs == rhs);
    r.exact = true;
    r.note = std::move(note);
    return r;
}

CheckReport CheckReport::skipped_hypothesis(std::string identity,
                                            std::vector<std::pair<std::string, std::string>> params,
                                            std::string reason) {
    CheckReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.skipped = true;
    r.note = std::move(reason);
    return r;
}

}  // namespace trigsum
