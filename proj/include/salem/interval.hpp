#pragma once

#include <string>

#include <gmpxx.h>

#include "salem/util.hpp"

namespace salem {

// Closed interval with exact rational endpoints.
struct RatInterval {
    mpq_class lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw PreconditionError("RatInterval: lo > hi");
    }
    static RatInterval point(const mpq_class& v) { return RatInterval(v, v); }

    mpq_class width() const { return hi - lo; }
    mpq_class mid() const { return (lo + hi) / 2; }
    bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool subset_of(const RatInterval& o) const { return o.lo <= lo && hi <= o.hi; }
    bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator*(const mpq_class& s) const;
    // requires 0 outside the interval
    RatInterval recip() const;
    RatInterval square() const;

    // round endpoints outward to denominator 2^bits
    RatInterval outward_dyadic(unsigned long bits) const {
        return {dyadic_floor(lo, bits), dyadic_ceil(hi, bits)};
    }
};

// Axis-aligned rectangle in C with exact rational corners.
struct ComplexInterval {
    RatInterval re, im;

    ComplexInterval() = default;
    ComplexInterval(RatInterval r, RatInterval i) : re(std::move(r)), im(std::move(i)) {}
    ComplexInterval(const mpq_class& re_lo, const mpq_class& re_hi, const mpq_class& im_lo,
                    const mpq_class& im_hi)
        : re(re_lo, re_hi), im(im_lo, im_hi) {}
    static ComplexInterval point(const mpq_class& x, const mpq_class& y) {
        return {RatInterval::point(x), RatInterval::point(y)};
    }

    mpq_class width() const { return std::max(re.width(), im.width()); }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool subset_of(const ComplexInterval& o) const {
        return re.subset_of(o.re) && im.subset_of(o.im);
    }
    bool disjoint(const ComplexInterval& o) const {
        return re.disjoint(o.re) || im.disjoint(o.im);
    }
    ComplexInterval conj() const { return {re, -im}; }

    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    ComplexInterval operator*(const mpq_class& s) const { return {re * s, im * s}; }
    // |z|^2 as an interval
    RatInterval abs_squared() const { return re.square() + im.square(); }
    // requires 0 outside the rectangle
    ComplexInterval recip() const;
    ComplexInterval operator/(const ComplexInterval& o) const { return *this * o.recip(); }
    ComplexInterval pow(long e) const;

    ComplexInterval outward_dyadic(unsigned long bits) const {
        return {re.outward_dyadic(bits), im.outward_dyadic(bits)};
    }
};

// Enclosure of sqrt(x); x.lo >= 0 required.
RatInterval sqrt_enclosure(const RatInterval& x, unsigned long precision_bits);
// Enclosure of log(x); x.lo > 0 required.  MPFR directed rounding.
RatInterval log_enclosure(const RatInterval& x, unsigned long precision_bits);
// Principal square root of a complex rectangle avoiding the branch cut
// (rectangle must not meet {re <= 0, im = 0}).
ComplexInterval complex_sqrt_enclosure(const ComplexInterval& z, unsigned long precision_bits);

std::string to_string(const RatInterval& x);
std::string to_string(const ComplexInterval& z);

}  // namespace salem
