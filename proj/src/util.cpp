#include "salem/util.hpp"

#include <mpfr.h>

#include <cctype>
#include <vector>

namespace salem {

mpq_class parse_rational(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ParseError("empty rational literal");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal: digits before and after the point
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::size_t frac_len = t.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad decimal literal: " + s);
        mpz_class num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw ParseError("bad decimal literal: " + s);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

mpq_class dyadic_floor(const mpq_class& x, unsigned long bits) {
    mpz_class scaled_num = x.get_num() << bits;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    mpq_class r(q, den);
    r.canonicalize();
    return r;
}

mpq_class dyadic_ceil(const mpq_class& x, unsigned long bits) {
    mpz_class scaled_num = x.get_num() << bits;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_class den = mpz_class(1) << bits;
    mpq_class r(q, den);
    r.canonicalize();
    return r;
}

std::string decimal_string(const mpq_class& x, int significant_digits) {
    if (significant_digits < 1) significant_digits = 1;
    mpfr_t v;
    mpfr_init2(v, 4 * significant_digits + 64);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDN);
    std::vector<char> buf(significant_digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", significant_digits, v);
    mpfr_clear(v);
    return std::string(buf.data());
}

}  // namespace salem
