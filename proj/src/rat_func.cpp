#include "salem/rat_func.hpp"

namespace salem {

RatFunc::RatFunc(IntPoly numerator, IntPoly denominator) {
    if (denominator.is_zero()) throw PreconditionError("RatFunc: zero denominator");
    if (numerator.is_zero()) {
        num_ = IntPoly();
        den_ = IntPoly::constant(1);
        return;
    }
    IntPoly g = gcd(numerator, denominator);
    numerator = divexact(numerator, g);
    denominator = divexact(denominator, g);
    // normalize contents: make both primitive, sign carried by numerator
    mpz_class cn = numerator.content();
    mpz_class cd = denominator.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (cg > 1) {
        IntPoly dn = IntPoly::constant(cg);
        numerator = divexact(numerator, dn);
        denominator = divexact(denominator, dn);
    }
    if (sign(denominator.lc()) < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    num_ = std::move(numerator);
    den_ = std::move(denominator);
}

mpq_class RatFunc::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw PreconditionError("RatFunc::eval: pole at this point");
    return num_.eval(x) / d;
}

std::string format_rat_func(const RatFunc& f, const std::string& var) {
    if (f.denominator() == IntPoly::constant(1)) return format_poly(f.numerator(), var);
    return "(" + format_poly(f.numerator(), var) + ") / (" + format_poly(f.denominator(), var) +
           ")";
}

}  // namespace salem
