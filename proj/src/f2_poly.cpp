#include "salem/f2_poly.hpp"

#include <algorithm>
#include <sstream>

namespace salem {

void F2Poly::normalize() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

F2Poly F2Poly::from_int_poly(const IntPoly& p) {
    F2Poly r;
    for (long k = 0; k <= p.degree(); ++k)
        if (mpz_odd_p(p.at(k).get_mpz_t())) r.set(k);
    return r;
}

F2Poly F2Poly::monomial(std::size_t k) {
    F2Poly r;
    r.set(k);
    return r;
}

long F2Poly::degree() const {
    if (w_.empty()) return -1;
    std::uint64_t top = w_.back();
    long bit = 63;
    while (!(top >> bit & 1)) --bit;
    return static_cast<long>(w_.size() - 1) * 64 + bit;
}

bool F2Poly::get(std::size_t k) const {
    std::size_t word = k / 64;
    if (word >= w_.size()) return false;
    return (w_[word] >> (k % 64)) & 1;
}

void F2Poly::set(std::size_t k) {
    std::size_t word = k / 64;
    if (word >= w_.size()) w_.resize(word + 1, 0);
    w_[word] |= std::uint64_t(1) << (k % 64);
    normalize();
}

bool F2Poly::operator<(const F2Poly& o) const {
    long d1 = degree(), d2 = o.degree();
    if (d1 != d2) return d1 < d2;
    for (std::size_t i = std::max(w_.size(), o.w_.size()); i-- > 0;) {
        std::uint64_t a = i < w_.size() ? w_[i] : 0;
        std::uint64_t b = i < o.w_.size() ? o.w_[i] : 0;
        if (a != b) return a < b;
    }
    return false;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
    std::vector<std::uint64_t> v(std::max(w_.size(), o.w_.size()), 0);
    for (std::size_t i = 0; i < w_.size(); ++i) v[i] ^= w_[i];
    for (std::size_t i = 0; i < o.w_.size(); ++i) v[i] ^= o.w_[i];
    return F2Poly(std::move(v));
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
    if (is_zero() || o.is_zero()) return F2Poly();
    std::size_t n = w_.size() + o.w_.size();
    std::vector<std::uint64_t> v(n, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t a = w_[i];
        while (a) {
            int bit = __builtin_ctzll(a);
            a &= a - 1;
            // xor o shifted by 64*i + bit into v
            std::size_t off = i;
            int sh = bit;
            for (std::size_t j = 0; j < o.w_.size(); ++j) {
                v[off + j] ^= o.w_[j] << sh;
                if (sh) v[off + j + 1] ^= o.w_[j] >> (64 - sh);
            }
        }
    }
    return F2Poly(std::move(v));
}

F2Poly F2Poly::derivative() const {
    // d/dx x^k = k x^(k-1): only odd k survive mod 2
    F2Poly r;
    long d = degree();
    for (long k = 1; k <= d; k += 2)
        if (get(k)) r.set(k - 1);
    return r;
}

bool F2Poly::is_square() const {
    long d = degree();
    for (long k = 1; k <= d; k += 2)
        if (get(k)) return false;
    return true;
}

F2Poly F2Poly::sqrt() const {
    if (!is_square()) throw PreconditionError("F2Poly::sqrt: not a square");
    F2Poly r;
    long d = degree();
    for (long k = 0; k <= d; k += 2)
        if (get(k)) r.set(k / 2);
    return r;
}

std::string F2Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        if (!get(k)) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0)
            os << "1";
        else if (k == 1)
            os << var;
        else
            os << var << "^" << k;
    }
    return os.str();
}

std::pair<F2Poly, F2Poly> divrem(const F2Poly& a, const F2Poly& b) {
    if (b.is_zero()) throw PreconditionError("F2 division by zero");
    long db = b.degree();
    F2Poly r = a, q;
    long dr = r.degree();
    while (dr >= db) {
        std::size_t shift = dr - db;
        q.set(shift);
        // r ^= b << shift
        F2Poly shifted = b * F2Poly::monomial(shift);
        r = r + shifted;
        dr = r.degree();
    }
    return {q, r};
}

F2Poly gcd(F2Poly a, F2Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a;
}

F2Poly mulmod(const F2Poly& a, const F2Poly& b, const F2Poly& m) {
    return divrem(a * b, m).second;
}

F2Poly powmod(const F2Poly& a, const mpz_class& e, const F2Poly& m) {
    F2Poly base = divrem(a, m).second;
    F2Poly r = F2Poly::one();
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        k >>= 1;
    }
    return r;
}

bool is_irreducible(const F2Poly& f) {
    long n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(2^n) == x mod f, and x^(2^(n/p)) - x coprime to f for prime p | n
    F2Poly x = F2Poly::x();
    mpz_class two_n = mpz_class(1) << n;
    if (powmod(x, two_n, f) != divrem(x, f).second) return false;
    for (long p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        mpz_class e = mpz_class(1) << (n / p);
        F2Poly g = gcd(f, powmod(x, e, f) + divrem(x, f).second);
        if (g.degree() > 0) return false;
    }
    return true;
}

namespace {

// square-free decomposition in characteristic 2
std::vector<std::pair<F2Poly, int>> square_free_decomposition(const F2Poly& f) {
    std::vector<std::pair<F2Poly, int>> out;
    if (f.degree() <= 0) return out;
    F2Poly c = gcd(f, f.derivative());
    F2Poly w = divrem(f, c).first;
    int i = 1;
    while (!w.is_one()) {
        F2Poly y = gcd(w, c);
        F2Poly z = divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        c = divrem(c, y).first;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : square_free_decomposition(c.sqrt())) out.emplace_back(g, 2 * m);
    }
    return out;
}

// random polynomial of degree < n from a deterministic stream
F2Poly random_f2(long n, std::uint64_t& state) {
    std::vector<std::uint64_t> w((n + 63) / 64, 0);
    for (auto& word : w) word = splitmix64(state);
    long top = n % 64;
    if (top) w.back() &= (std::uint64_t(1) << top) - 1;
    return F2Poly(std::move(w));
}

// split a square-free product of irreducibles, all of degree d
void equal_degree_split(const F2Poly& f, long d, std::uint64_t& state,
                        std::vector<F2Poly>& out) {
    long n = f.degree();
    if (n == d) {
        out.push_back(f);
        return;
    }
    // trace map T(u) = u + u^2 + ... + u^(2^(d-1)) splits with prob ~ 1/2
    while (true) {
        F2Poly u = random_f2(n, state);
        if (u.degree() < 1) continue;
        F2Poly t, power = divrem(u, f).second;
        for (long i = 0; i < d; ++i) {
            t = t + power;
            power = mulmod(power, power, f);
        }
        F2Poly g = gcd(f, t);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree_split(g, d, state, out);
            equal_degree_split(divrem(f, g).first, d, state, out);
            return;
        }
    }
}

// distinct-degree then equal-degree factorization of a square-free input
std::vector<F2Poly> factor_square_free(const F2Poly& f, std::uint64_t& state) {
    std::vector<F2Poly> out;
    F2Poly rest = f;
    F2Poly x = F2Poly::x();
    F2Poly h = divrem(x, rest).second;  // x^(2^d) mod rest, d = 0 so far
    long d = 0;
    while (rest.degree() > 0) {
        if (rest.degree() < 2 * (d + 1)) {
            out.push_back(rest);  // what remains is a single irreducible
            break;
        }
        ++d;
        h = mulmod(h, h, rest);
        F2Poly g = gcd(rest, h + divrem(x, rest).second);
        if (g.degree() > 0) {
            equal_degree_split(g, d, state, out);
            rest = divrem(rest, g).first;
            h = divrem(h, rest).second;
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<F2Poly, int>> factor_f2(const F2Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw PreconditionError("factor_f2: zero polynomial");
    std::vector<std::pair<F2Poly, int>> out;
    if (f.degree() == 0) return out;
    // deterministic seed derived from the input
    std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
    for (long k = 0; k <= f.degree(); ++k)
        if (f.get(k)) state = state * 6364136223846793005ULL + k + 1;

    for (const auto& [part, mult] : square_free_decomposition(f)) {
        for (const auto& irr : factor_square_free(part, state)) out.emplace_back(irr, mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<F2Poly, int>> factor_mod2(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw PreconditionError("factor_mod2: zero polynomial");
    F2Poly f = F2Poly::from_int_poly(p);
    if (f.is_zero())
        throw PreconditionError("factor_mod2: polynomial vanishes mod 2");
    return factor_f2(f, seed);
}

}  // namespace salem
