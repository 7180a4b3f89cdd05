#pragma once

#include <string>

#include "salem/int_poly.hpp"

namespace salem {

// Reduced rational function over Z: gcd(num, den) = 1 after
// normalization, denominator has positive leading coefficient.
class RatFunc {
  public:
    RatFunc() : num_(), den_(IntPoly::constant(1)) {}
    RatFunc(IntPoly numerator, IntPoly denominator);

    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    mpq_class eval(const mpq_class& x) const;

  private:
    IntPoly num_, den_;
};

std::string format_rat_func(const RatFunc& f, const std::string& var = "x");

}  // namespace salem
