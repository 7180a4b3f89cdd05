#include "salem/classify.hpp"

#include <set>

#include "salem/zfactor.hpp"

namespace salem {

namespace {

// Graeffe map: roots get squared.  p(x) = A(x^2) + x B(x^2) gives
// G(p)(y) = +/- (A(y)^2 - y B(y)^2), normalized monic.
IntPoly graeffe(const IntPoly& p) {
    long d = p.degree();
    std::vector<mpz_class> even, odd;
    for (long k = 0; k <= d; ++k) {
        if (k % 2 == 0)
            even.push_back(p.at(k));
        else
            odd.push_back(p.at(k));
    }
    IntPoly a{std::move(even)}, b{std::move(odd)};
    IntPoly g = a * a - IntPoly({0, 1}) * b * b;
    if (g.is_zero()) return g;
    if (sign(g.lc()) < 0) g = -g;
    return g;
}

bool within_binomial_bounds(const IntPoly& p) {
    long d = p.degree();
    mpz_class binom = 1;  // C(d, 0)
    for (long k = 0; k <= d; ++k) {
        // coefficient of x^(d-k) is an elementary symmetric function of
        // the roots: on-circle spectra obey |e_k| <= C(d, k)
        if (abs(p.at(d - k)) > binom) return false;
        binom = binom * (d - k) / (k + 1);
    }
    return true;
}

}  // namespace

bool is_cyclotomic(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero() || !p.is_monic())
        throw PreconditionError("is_cyclotomic: needs a monic polynomial");
    if (!is_irreducible_z(p, seed))
        throw PreconditionError("is_cyclotomic: reducible input rejected");
    if (p.degree() == 1 && p.at(0) == 0) return false;  // p = x, root 0

    long d = p.degree();
    std::set<IntPoly, bool (*)(const IntPoly&, const IntPoly&)> seen(
        [](const IntPoly& a, const IntPoly& b) { return a.coeffs() < b.coeffs(); });
    IntPoly cur = p;
    long cap = 2 * d * d + 64;
    for (long i = 0; i < cap; ++i) {
        if (!within_binomial_bounds(cur)) return false;  // some root left the circle
        if (!seen.insert(cur).second) return true;       // orbit cycled: all roots stay put
        cur = graeffe(cur);
        if (cur.degree() != d)
            throw PreconditionError("is_cyclotomic: degenerate Graeffe iterate (root at 0?)");
    }
    // unreachable for irreducible input: either a coefficient grows or the
    // orbit cycles within the cap
    throw PreconditionError("is_cyclotomic: iteration cap exceeded");
}

SalemReport salem_classify(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw PreconditionError("salem_classify: zero polynomial");
    SalemReport rep;
    rep.is_monic = p.is_monic();
    rep.is_reciprocal = is_reciprocal(p);
    rep.is_irreducible = p.degree() >= 1 && is_irreducible_z(p.primitive_part(), seed) &&
                         p == p.primitive_part();

    // distinct real roots off the unit circle (of the square-free part)
    IntPoly sf = p.primitive_part();
    if (sf.degree() >= 1) {
        IntPoly g = gcd(sf, sf.derivative());
        if (g.degree() > 0) sf = divexact(sf, g);
        mpq_class bound(cauchy_root_bound(sf) + 1);
        long total = sturm_count(sf, -bound, bound);
        long at_one = (sf.eval(mpq_class(1)) == 0 ? 1 : 0) + (sf.eval(mpq_class(-1)) == 0 ? 1 : 0);
        rep.real_roots_off_circle = total - at_one;
    }

    if (!rep.is_monic || !rep.is_reciprocal || !rep.is_irreducible || p.degree() < 2 ||
        p.degree() % 2 != 0)
        return rep;

    // p irreducible reciprocal of even degree 2n: p = x^n T(x + 1/x).
    // Salem iff T has all n roots real, exactly one in (2, oo) and the
    // rest in (-2, 2).  T(2) = p(1) != 0 and T(-2) = +/- p(-1) != 0.
    IntPoly t = trace_polynomial(p);
    long n = t.degree();
    mpq_class tb(cauchy_root_bound(t) + 2);
    long above = sturm_count(t, 2, tb);
    long below = sturm_count(t, -tb, -2);
    long middle = sturm_count(t, -2, 2);
    if (above == 1 && below == 0 && middle == n - 1) {
        rep.is_salem = true;
        // exactly one simple root in (1, bound), so the endpoint signs
        // differ and plain bisection certifies the enclosure
        mpq_class pb(cauchy_root_bound(p) + 1);
        auto refined = refine_real_root(p, mpq_class(1), pb, kSalemEnclosureRelWidth);
        rep.salem_number = RatInterval(refined.first, refined.second);
    }
    return rep;
}

SpectralDecomposition spectral_classify(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero() || !p.is_monic())
        throw PreconditionError("spectral_classify: needs a monic polynomial");
    SpectralDecomposition out;
    if (p.degree() == 0) return out;

    for (const auto& [factor, mult] : factor_z(p, seed)) {
        if (is_cyclotomic(factor, seed)) {
            out.cyclotomic_factors.emplace_back(factor, mult);
            continue;
        }
        SalemReport rep = salem_classify(factor, seed);
        if (!rep.is_salem)
            throw PreconditionError(
                "spectral_classify: not an isometry spectrum (factor neither cyclotomic nor "
                "Salem): " +
                format_poly(factor));
        if (out.salem_factor || mult > 1)
            throw PreconditionError(
                "spectral_classify: not an isometry spectrum (more than one Salem factor "
                "counted with multiplicity)");
        out.salem_factor = factor;
        out.entropy_is_zero = false;
        out.entropy = log_enclosure(*rep.salem_number, 128);
    }
    return out;
}

}  // namespace salem
