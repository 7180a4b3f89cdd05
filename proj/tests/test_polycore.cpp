#include "doctest.h"

#include <random>

#include "salem/int_poly.hpp"
#include "salem/matrix.hpp"
#include "salem/rat_func.hpp"

using namespace salem;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

const char* kLehmer = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1";
const char* kPhi14 = "x^14 - x^11 - x^10 + x^7 - x^4 - x^3 + 1";

// Independent oracle: plain Euclidean gcd over Q, no primitive-part tricks.
QPoly naive_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

// Independent oracle: count real roots by sign changes on a dense grid,
// refining the grid until the count stabilizes twice.
long grid_real_root_count(const IntPoly& p) {
    mpq_class bound(cauchy_root_bound(p));
    long prev = -1, stable = 0;
    for (int k = 5; k < 20; ++k) {
        long steps = 64L << (k - 5);
        mpq_class h = 2 * bound / steps;
        long count = 0;
        int last_sign = 0;
        for (long i = 0; i <= steps; ++i) {
            int s = sign(p.eval(-bound + h * i));
            if (s == 0) continue;
            if (last_sign != 0 && s != last_sign) ++count;
            last_sign = s;
        }
        if (count == prev) {
            if (++stable == 2) return count;
        } else {
            stable = 0;
            prev = count;
        }
    }
    return prev;
}

std::mt19937_64 rng(20090427);

IntPoly random_poly(int max_deg, int coeff_range) {
    std::uniform_int_distribution<int> degd(1, max_deg);
    std::uniform_int_distribution<int> cd(-coeff_range, coeff_range);
    int d = degd(rng);
    std::vector<mpz_class> c(d + 1);
    for (auto& x : c) x = cd(rng);
    while (c[d] == 0) c[d] = cd(rng);
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
    CHECK(P("x-1") * P("x+1") == P("x^2-1"));
    CHECK(P("x^2-1") - P("x^2") == P("-1"));
    CHECK(P("0") == IntPoly());
    CHECK(P("[1, -2, 0, 1]") == P("x^3 - 2x + 1"));
    CHECK(P("2*x^2 + 3x") == IntPoly({0, 3, 2}));
    CHECK_THROWS_AS(P("x^2 +"), ParseError);
    CHECK_THROWS_AS(P("[1, 2"), ParseError);
    CHECK(format_poly(P(kPhi14)) == kPhi14);
    CHECK(format_poly(IntPoly()) == "0");
    CHECK(format_poly(P("-x^2+2x-3")) == "-x^2 + 2x - 3");
}

TEST_CASE("divrem over rationals") {
    auto [q, r] = divrem(P("x^2-1"), P("x-1"));
    CHECK(q == QPoly(P("x+1")));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(divrem(P("x"), IntPoly()), PreconditionError);

    // recombination is exact for random pairs
    for (int i = 0; i < 100; ++i) {
        IntPoly a = random_poly(12, 9);
        IntPoly b = random_poly(6, 9);
        auto [qq, rr] = divrem(a, b);
        CHECK(qq * QPoly(b) + rr == QPoly(a));
        CHECK(rr.degree() < b.degree());
    }
}

TEST_CASE("gcd matches the naive Euclidean oracle") {
    IntPoly phi10 = P(kLehmer);
    CHECK(gcd(phi10, phi10.derivative()) == IntPoly::constant(1));

    for (int i = 0; i < 60; ++i) {
        IntPoly a = random_poly(8, 5);
        IntPoly b = random_poly(8, 5);
        IntPoly c = random_poly(4, 3);
        IntPoly x = a * c, y = b * c;
        QPoly expect = naive_gcd(QPoly(x), QPoly(y));
        CHECK(QPoly(gcd(x, y)).monic() == expect);
        CHECK(divides(c, gcd(x, y) * c.lc()));
    }
}

TEST_CASE("is_reciprocal") {
    CHECK(is_reciprocal(P(kLehmer)));
    CHECK(is_reciprocal(P("x^2 - 3x + 1")));
    CHECK_FALSE(is_reciprocal(P("x^2 + x")));
    CHECK_THROWS_AS(is_reciprocal(IntPoly()), PreconditionError);
}

TEST_CASE("trace polynomial") {
    CHECK(trace_polynomial(P("x^2 - 3x + 1")) == P("x - 3"));
    CHECK(trace_polynomial(P("x^2 + 1")) == P("x"));
    IntPoly g14 = trace_polynomial(P(kPhi14));
    CHECK(g14.degree() == 7);
    CHECK(expand_trace_polynomial(g14) == P(kPhi14));
    CHECK_THROWS_AS(trace_polynomial(P("x^2 + x")), PreconditionError);
    CHECK_THROWS_AS(trace_polynomial(P("x^3 + 1")), PreconditionError);

    // round trip on random monic reciprocal polynomials of degree <= 20
    std::uniform_int_distribution<int> nd(1, 10), cd(-7, 7);
    for (int i = 0; i < 200; ++i) {
        int n = nd(rng);
        std::vector<mpz_class> c(2 * n + 1);
        c[0] = c[2 * n] = 1;
        for (int k = 1; k <= n; ++k) {
            c[k] = cd(rng);
            c[2 * n - k] = c[k];
        }
        IntPoly p{std::move(c)};
        CHECK(expand_trace_polynomial(trace_polynomial(p)) == p);
    }
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(P("x^2-2"), 0, 2) == 1);
    IntPoly g14 = trace_polynomial(P(kPhi14));
    CHECK(sturm_count(g14, 2, 4) == 1);
    CHECK(sturm_count(g14, -2, 2) == 6);
    CHECK_THROWS_AS(sturm_count(P("x^2-1"), 1, 2), PreconditionError);       // endpoint root
    CHECK_THROWS_AS(sturm_count(P("x^2-2x+1"), 0, 3), PreconditionError);    // not square-free
}

TEST_CASE("sturm_count agrees with the dense-grid oracle") {
    int done = 0;
    while (done < 50) {
        IntPoly p = random_poly(12, 8);
        IntPoly sf = divexact(p, gcd(p, p.derivative()));
        if (sf.degree() < 1) continue;
        ++done;
        mpq_class b(cauchy_root_bound(sf) + 1);
        CHECK(sturm_count(sf, -b, b) == grid_real_root_count(sf));
    }
}

TEST_CASE("real root isolation") {
    IntPoly p = P("x^3 - 2x");  // roots -sqrt2, 0, sqrt2
    auto iv = isolate_real_roots(p);
    REQUIRE(iv.size() == 3);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) CHECK(iv[i].second <= iv[i + 1].first);
    auto r = refine_real_root(p, iv[2].first, iv[2].second, mpq_class(1, 1000000));
    mpq_class mid = (r.first + r.second) / 2;
    CHECK(abs(mid - parse_rational("1.414214")) < parse_rational("0.00001"));
}

TEST_CASE("char_poly") {
    CHECK(char_poly(IntMatrix::identity(2)) == P("x^2 - 2x + 1"));

    // companion matrix identity
    IntPoly phi14 = P(kPhi14);
    std::size_t n = phi14.degree();
    IntMatrix comp(n, n);
    for (std::size_t i = 1; i < n; ++i) comp(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) comp(i, n - 1) = -phi14.at(i);
    CHECK(char_poly(comp) == phi14);

    IntMatrix bad(2, 3);
    CHECK_THROWS_AS(char_poly(bad), PreconditionError);

    // block-diagonal multiplicativity on random blocks
    for (int i = 0; i < 20; ++i) {
        std::uniform_int_distribution<int> nd(1, 4), cd(-4, 4);
        std::size_t n1 = nd(rng), n2 = nd(rng);
        IntMatrix a(n1, n1), b(n2, n2);
        for (std::size_t r0 = 0; r0 < n1; ++r0)
            for (std::size_t c0 = 0; c0 < n1; ++c0) a(r0, c0) = cd(rng);
        for (std::size_t r0 = 0; r0 < n2; ++r0)
            for (std::size_t c0 = 0; c0 < n2; ++c0) b(r0, c0) = cd(rng);
        IntMatrix bd = IntMatrix::block_diag({a, b});
        CHECK(char_poly(bd) == char_poly(a) * char_poly(b));
    }
}

TEST_CASE("rational functions normalize") {
    RatFunc f(P("x^2-1"), P("x-1"));
    CHECK(f.numerator() == P("x+1"));
    CHECK(f.denominator() == IntPoly::constant(1));

    RatFunc g(P("2x^2"), P("-4x"));
    CHECK(g.numerator() == P("-x"));
    CHECK(g.denominator() == P("2"));
    CHECK(g.eval(3) == mpq_class(-3, 2));
    CHECK_THROWS_AS(RatFunc(P("x"), IntPoly()), PreconditionError);
    CHECK_THROWS_AS(RatFunc(P("1"), P("x")).eval(0), PreconditionError);
}
