#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "salem/util.hpp"

namespace salem {

class QPoly;

// Dense integer polynomial, coefficients low-to-high, arbitrary precision.
// The zero polynomial is the empty coefficient list; otherwise the leading
// coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static IntPoly constant(const mpz_class& v) { return IntPoly({v}); }
    static IntPoly x() { return IntPoly({0, 1}); }
    // x^k with coefficient a
    static IntPoly monomial(const mpz_class& a, std::size_t k);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpz_class& lc() const;
    mpz_class at(std::size_t k) const { return k < c_.size() ? c_[k] : mpz_class(0); }
    bool is_monic() const { return !is_zero() && lc() == 1; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const mpz_class& s) const;

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    IntPoly derivative() const;
    // x^deg * p(1/x)
    IntPoly reversed() const;
    // p(-x)
    IntPoly negated_arg() const;
    // p(x + a)
    IntPoly shifted(const mpz_class& a) const;
    // content (gcd of coefficients, 0 for the zero polynomial)
    mpz_class content() const;
    // p / content, with positive leading coefficient
    IntPoly primitive_part() const;
    mpz_class squared_l2_norm() const;
    mpz_class max_abs_coeff() const;

  private:
    void normalize();
    std::vector<mpz_class> c_;
};

// Dense rational polynomial; used for all exact intermediate work over Q.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit QPoly(const IntPoly& p);

    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const mpq_class& lc() const;
    mpq_class at(std::size_t k) const { return k < c_.size() ? c_[k] : mpq_class(0); }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const mpq_class& s) const;

    mpq_class eval(const mpq_class& x) const;
    QPoly derivative() const;
    QPoly monic() const;

    // primitive integer polynomial with positive leading coefficient,
    // plus the positive rational s with *this == s * result
    std::pair<IntPoly, mpq_class> clear_denominators() const;

  private:
    void normalize();
    std::vector<mpq_class> c_;
};

// quotient/remainder over Q; q must be nonzero, deg r < deg q
std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& q);
// divrem over Q of integer polynomials (spec: rational arithmetic when
// the divisor is not monic)
std::pair<QPoly, QPoly> divrem(const IntPoly& p, const IntPoly& q);
// exact integer division; throws PreconditionError if q does not divide p
IntPoly divexact(const IntPoly& p, const IntPoly& q);
bool divides(const IntPoly& q, const IntPoly& p);

// gcd over Q, cleared to primitive integer form with positive lc
IntPoly gcd(const IntPoly& p, const IntPoly& q);
QPoly gcd_monic(const QPoly& p, const QPoly& q);

IntPoly pow(const IntPoly& p, unsigned long e);

bool is_square_free(const IntPoly& p);

// true iff the coefficient list is palindromic: x^deg p(1/x) = p(x)
bool is_reciprocal(const IntPoly& p);

// For monic reciprocal p of even degree 2n, the unique g of degree n with
// p(x) = x^n g(x + 1/x).  Rejects other inputs.
IntPoly trace_polynomial(const IntPoly& p);
// x^n g(x + 1/x) for g of degree n: inverse of trace_polynomial
IntPoly expand_trace_polynomial(const IntPoly& g);

// Cauchy bound: every complex root has |z| < bound (integer, >= 1)
mpz_class cauchy_root_bound(const IntPoly& p);

// Exact count of real roots of square-free p in the open interval
// (lo, hi) via a Sturm chain over Q.  Throws if p is not square-free or
// an endpoint is a root.
long sturm_count(const IntPoly& p, const mpq_class& lo, const mpq_class& hi);

// Sturm chain as primitive integer polynomials (sign-faithful).
std::vector<IntPoly> sturm_chain(const IntPoly& p);
long sturm_count_with_chain(const std::vector<IntPoly>& chain, const mpq_class& lo,
                            const mpq_class& hi);
// sign variations at +inf minus at lo... helpers for isolation
long sturm_variations(const std::vector<IntPoly>& chain, const mpq_class& x);
long sturm_variations_at_neg_inf(const std::vector<IntPoly>& chain);
long sturm_variations_at_pos_inf(const std::vector<IntPoly>& chain);

// Isolating intervals (lo, hi) for every distinct real root of
// square-free p; endpoints rational non-roots, intervals disjoint, sorted.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& p);
// Shrink an isolating interval (sign change required) below target_width.
std::pair<mpq_class, mpq_class> refine_real_root(const IntPoly& p, mpq_class lo, mpq_class hi,
                                                 const mpq_class& target_width);

// Text format shared repo-wide: symbolic ("x^3 - 2x + 1") or a JSON array
// of integer coefficients low-to-high ("[1, -2, 0, 1]").
IntPoly parse_poly(const std::string& text);
// Symbolic form, high-to-low.
std::string format_poly(const IntPoly& p, const std::string& var = "x");

}  // namespace salem
