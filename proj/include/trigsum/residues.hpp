#pragma once

#include <vector>

#include "trigsum/check.hpp"
#include "trigsum/numeric.hpp"

namespace trigsum {

enum class MeromorphicId { F_COS, G_SIN };

/// F_COS: cos^{2a}(pi z/k) / (cos^{2a+2}(2 pi z/k) (e^{2 pi i z} - 1)), k odd.
/// G_SIN: sin^{2a}(pi z/k) / (sin^{2a+2}(2 pi z/k) (e^{2 pi i z} - 1)), k odd.
struct MeromorphicSpec {
    MeromorphicId id = MeromorphicId::G_SIN;
    long k = 5;
    int a = 1;
};

/// Circular contour: center, dyadic-rational radius, node count (power of
/// two, >= 256). Node angles are half-shifted to avoid axis-aligned nodes.
struct ContourSpec {
    HighComplex center;
    Rational radius{1, 8};
    long nodes = 1024;
};

const char* meromorphic_name(MeromorphicId id);
void validate_meromorphic_spec(const MeromorphicSpec& spec);

HighComplex eval_meromorphic(const PrecisionContext& ctx, const MeromorphicSpec& spec,
                             const HighComplex& z);

/// All poles of the function in the period strip 0 <= Re z < k.
std::vector<HighComplex> meromorphic_poles(const PrecisionContext& ctx, const MeromorphicSpec& spec);

/// (1/2 pi i) * contour integral by the trapezoidal rule; errors unless the
/// contour encloses exactly one pole and stays clear of the rest.
HighComplex residue_numeric(const PrecisionContext& ctx, const MeromorphicSpec& spec,
                            const ContourSpec& contour);

enum class PoleClass { K4, K34, ZERO, KHALF };
const char* pole_class_name(PoleClass c);

/// Pole location for a class, as an exact dyadic point.
HighComplex pole_location(const PrecisionContext& ctx, const MeromorphicSpec& spec, PoleClass c);

/// Published residue formulas; defined only for a = 1.
HighComplex residue_closed(const PrecisionContext& ctx, const MeromorphicSpec& spec, PoleClass c);

/// Half-range trig sum against the residue expression of the theorem:
/// F_COS: sum = -1/2 - pi i (R_{k/4} + R_{3k/4});  G_SIN: sum = -pi i (R_0 + R_{k/2}).
CheckReport section9_check(const PrecisionContext& ctx, const MeromorphicSpec& spec,
                           long nodes = 1024);

}  // namespace trigsum
