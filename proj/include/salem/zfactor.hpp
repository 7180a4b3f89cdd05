#pragma once

#include <utility>
#include <vector>

#include "salem/int_poly.hpp"

namespace salem {

// Complete irreducible factorization over Z of a nonzero primitive
// polynomial (Zassenhaus: mod-p factorization at several small primes,
// degree-pattern pruning, Hensel lifting at one good prime, bounded
// subset recombination).  Factors are primitive with positive leading
// coefficient, in canonical order (ascending degree, then coefficient
// lists compared low-to-high).  seed feeds mod-p equal-degree splitting;
// the result does not depend on it.
std::vector<std::pair<IntPoly, int>> factor_z(const IntPoly& p, std::uint64_t seed = 0);

bool is_irreducible_z(const IntPoly& p, std::uint64_t seed = 0);

}  // namespace salem
