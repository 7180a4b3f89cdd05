#include "salem/matrix.hpp"

namespace salem {

namespace {

void divide_exact(mpz_class& x, long k) {
    mpz_class q, r;
    mpz_class kk(k);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), kk.get_mpz_t());
    if (r != 0) throw PreconditionError("char_poly: non-exact division (corrupt input?)");
    x = q;
}

void divide_exact(mpq_class& x, long k) { x /= k; }

// Faddeev-LeVerrier: M_1 = A, c_k = -tr(M_k)/k, M_{k+1} = A(M_k + c_k I).
// For integer A all the c_k are integers (Newton's identities).
template <class T>
std::vector<T> fl_coeffs(const Matrix<T>& m) {
    if (!m.is_square()) throw PreconditionError("char_poly: non-square matrix");
    std::size_t n = m.rows();
    std::vector<T> coeff(n + 1, T(0));
    coeff[n] = T(1);
    if (n == 0) return coeff;
    Matrix<T> mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        T ck = -mk.trace();
        divide_exact(ck, static_cast<long>(k));
        coeff[n - k] = ck;
        if (k < n) {
            Matrix<T> shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += ck;
            mk = m * shifted;
        }
    }
    return coeff;
}

}  // namespace

IntPoly char_poly(const IntMatrix& m) { return IntPoly(fl_coeffs(m)); }

QPoly char_poly(const RatMatrix& m) { return QPoly(fl_coeffs(m)); }

mpz_class det(const IntMatrix& m) {
    IntPoly cp = char_poly(m);
    mpz_class c0 = cp.at(0);
    return (m.rows() % 2 == 0) ? c0 : -c0;
}

}  // namespace salem
