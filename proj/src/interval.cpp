#include "salem/interval.hpp"

#include <mpfr.h>

#include <algorithm>

namespace salem {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    mpq_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    mpq_class mn = std::min(std::min(a, b), std::min(c, d));
    mpq_class mx = std::max(std::max(a, b), std::max(c, d));
    return {mn, mx};
}

RatInterval RatInterval::operator*(const mpq_class& s) const {
    if (sign(s) >= 0) return {lo * s, hi * s};
    return {hi * s, lo * s};
}

RatInterval RatInterval::recip() const {
    if (contains_zero()) throw PreconditionError("RatInterval::recip: interval contains zero");
    return {1 / hi, 1 / lo};
}

RatInterval RatInterval::square() const {
    if (sign(lo) >= 0) return {lo * lo, hi * hi};
    if (sign(hi) <= 0) return {hi * hi, lo * lo};
    mpq_class m = std::max(mpq_class(-lo), hi);
    return {mpq_class(0), m * m};
}

ComplexInterval ComplexInterval::recip() const {
    if (contains_zero())
        throw PreconditionError("ComplexInterval::recip: rectangle contains zero");
    RatInterval d = abs_squared();
    RatInterval dinv = d.recip();
    return {re * dinv, (-im) * dinv};
}

ComplexInterval ComplexInterval::pow(long e) const {
    if (e == 0) return ComplexInterval::point(1, 0);
    ComplexInterval base = e > 0 ? *this : recip();
    unsigned long k = e > 0 ? e : -e;
    ComplexInterval r = ComplexInterval::point(1, 0);
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

namespace {

mpq_class mpfr_to_rational(mpfr_t v) {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v);
    return q;
}

}  // namespace

RatInterval sqrt_enclosure(const RatInterval& x, unsigned long precision_bits) {
    if (sign(x.lo) < 0) throw PreconditionError("sqrt_enclosure: negative interval");
    mpfr_t lo, hi;
    mpfr_init2(lo, precision_bits);
    mpfr_init2(hi, precision_bits);
    mpfr_set_q(lo, x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_sqrt(lo, lo, MPFR_RNDD);
    mpfr_set_q(hi, x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    RatInterval r(mpfr_to_rational(lo), mpfr_to_rational(hi));
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

RatInterval log_enclosure(const RatInterval& x, unsigned long precision_bits) {
    if (sign(x.lo) <= 0) throw PreconditionError("log_enclosure: needs a positive interval");
    mpfr_t lo, hi;
    mpfr_init2(lo, precision_bits);
    mpfr_init2(hi, precision_bits);
    mpfr_set_q(lo, x.lo.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo, lo, MPFR_RNDD);
    mpfr_set_q(hi, x.hi.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi, hi, MPFR_RNDU);
    RatInterval r(mpfr_to_rational(lo), mpfr_to_rational(hi));
    mpfr_clear(lo);
    mpfr_clear(hi);
    return r;
}

ComplexInterval complex_sqrt_enclosure(const ComplexInterval& z, unsigned long precision_bits) {
    if (sign(z.re.hi) <= 0 && z.im.contains_zero())
        throw PreconditionError("complex_sqrt_enclosure: rectangle meets the branch cut");
    // principal branch: w = sqrt(z), re w = sqrt((|z| + re z)/2) > 0,
    // im w = im z / (2 re w)
    RatInterval abs2 = z.abs_squared();
    RatInterval abs = sqrt_enclosure(abs2, precision_bits);
    RatInterval re2 = (abs + z.re) * mpq_class(1, 2);
    if (sign(re2.lo) < 0) re2.lo = 0;
    RatInterval rew = sqrt_enclosure(re2, precision_bits);
    if (sign(rew.lo) <= 0)
        throw PreconditionError("complex_sqrt_enclosure: cannot separate real part from zero");
    RatInterval imw = z.im * (rew * mpq_class(2)).recip();
    return {rew, imw};
}

std::string to_string(const RatInterval& x) {
    return "[" + x.lo.get_str() + ", " + x.hi.get_str() + "]";
}

std::string to_string(const ComplexInterval& z) {
    return to_string(z.re) + " + " + to_string(z.im) + " i";
}

}  // namespace salem
