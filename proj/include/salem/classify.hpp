#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "salem/int_poly.hpp"
#include "salem/interval.hpp"

namespace salem {

// Exact test: all roots of a monic irreducible polynomial are roots of
// unity.  Graeffe orbit detection: on-circle spectra keep coefficients
// inside the binomial bounds and must revisit a polynomial; any root off
// the circle blows a coefficient past the bound.
bool is_cyclotomic(const IntPoly& p, std::uint64_t seed = 0);

struct SalemReport {
    bool is_monic = false;
    bool is_reciprocal = false;
    bool is_irreducible = false;
    long real_roots_off_circle = 0;  // distinct real roots with |x| != 1
    bool is_salem = false;
    std::optional<RatInterval> salem_number;  // certified enclosure of the root > 1
};

// Decide whether p is a Salem polynomial, entirely in exact arithmetic:
// trace polynomial + Sturm counts locate every root relative to the unit
// circle.  Non-Salem input yields a report, not an error.
SalemReport salem_classify(const IntPoly& p, std::uint64_t seed = 0);

// Default relative width of the Salem number enclosure.
inline const mpq_class kSalemEnclosureRelWidth = mpq_class(1, mpz_class("1000000000000000"));

struct SpectralDecomposition {
    std::vector<std::pair<IntPoly, int>> cyclotomic_factors;
    std::optional<IntPoly> salem_factor;
    bool entropy_is_zero = true;
    RatInterval entropy;  // log of the Salem number, or [0, 0]
};

// Cyclotomic x Salem factorization of an isometry characteristic
// polynomial, with the entropy it determines.  Inputs violating the
// factorization theorem's guarantee are rejected.
SpectralDecomposition spectral_classify(const IntPoly& p, std::uint64_t seed = 0);

}  // namespace salem
