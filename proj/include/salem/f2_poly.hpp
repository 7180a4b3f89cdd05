#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "salem/int_poly.hpp"

namespace salem {

// Polynomial over F2, bit k = coefficient of x^k.
class F2Poly {
  public:
    F2Poly() = default;
    explicit F2Poly(std::vector<std::uint64_t> words) : w_(std::move(words)) { normalize(); }
    static F2Poly from_int_poly(const IntPoly& p);
    static F2Poly one() { return F2Poly({1}); }
    static F2Poly x() { return F2Poly({2}); }
    static F2Poly monomial(std::size_t k);

    bool is_zero() const { return w_.empty(); }
    bool is_one() const { return w_.size() == 1 && w_[0] == 1; }
    long degree() const;  // -1 for zero
    bool get(std::size_t k) const;
    void set(std::size_t k);

    bool operator==(const F2Poly& o) const { return w_ == o.w_; }
    bool operator!=(const F2Poly& o) const { return w_ != o.w_; }
    // canonical order: by degree, then by bit value
    bool operator<(const F2Poly& o) const;

    F2Poly operator+(const F2Poly& o) const;  // xor
    F2Poly operator*(const F2Poly& o) const;

    F2Poly derivative() const;
    // polynomials with only even exponents have a square root in F2[x]
    bool is_square() const;
    F2Poly sqrt() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<std::uint64_t> w_;
};

std::pair<F2Poly, F2Poly> divrem(const F2Poly& a, const F2Poly& b);
F2Poly gcd(F2Poly a, F2Poly b);
F2Poly mulmod(const F2Poly& a, const F2Poly& b, const F2Poly& m);
F2Poly powmod(const F2Poly& a, const mpz_class& e, const F2Poly& m);

bool is_irreducible(const F2Poly& f);

// Complete irreducible factorization over F2 with multiplicities, sorted
// canonically (degree, then bit value).  seed feeds the equal-degree
// splitting; results are independent of it.
std::vector<std::pair<F2Poly, int>> factor_f2(const F2Poly& f, std::uint64_t seed = 0);

// Mod-2 reduction of p followed by factor_f2.  Rejects polynomials whose
// reduction vanishes.
std::vector<std::pair<F2Poly, int>> factor_mod2(const IntPoly& p, std::uint64_t seed = 0);

}  // namespace salem
