#include "salem/zfactor.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace salem {

namespace {

// ------------------------------------------------------------------
// arithmetic in Fp[x] for small odd primes

struct FpPoly {
    long p;
    std::vector<long> c;  // residues in [0, p)

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    long lc() const { return c.back(); }
};

long mod_inverse(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw PreconditionError("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}

FpPoly fp_from(const IntPoly& f, long p) {
    FpPoly r{p, {}};
    r.c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) {
        mpz_class m = x % p;
        long v = m.get_si();
        if (v < 0) v += p;
        r.c.push_back(v);
    }
    r.normalize();
    return r;
}

IntPoly fp_to_int(const FpPoly& f) {
    std::vector<mpz_class> v(f.c.begin(), f.c.end());
    return IntPoly(std::move(v));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return {a.p, {}};
    long p = a.p;
    std::vector<long> v(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            v[i + j] = (v[i + j] + a.c[i] * b.c[j]) % p;
    }
    FpPoly r{p, std::move(v)};
    r.normalize();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    long p = a.p;
    std::vector<long> v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] = (v[i] - b.c[i] % p + p) % p;
    FpPoly r{p, std::move(v)};
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> fp_divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw PreconditionError("Fp division by zero");
    long p = a.p;
    std::vector<long> r = a.c;
    long db = b.degree();
    long da = static_cast<long>(r.size()) - 1;
    if (da < db) return {{p, {}}, a};
    std::vector<long> q(da - db + 1, 0);
    long inv = mod_inverse(b.lc(), p);
    for (long k = da; k >= db; --k) {
        long t = (r[k] * inv) % p;
        if (!t) continue;
        q[k - db] = t;
        for (long j = 0; j <= db; ++j) r[k - db + j] = ((r[k - db + j] - t * b.c[j]) % p + p) % p;
    }
    FpPoly qq{p, std::move(q)}, rr{p, std::move(r)};
    qq.normalize();
    rr.normalize();
    return {qq, rr};
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        auto [q, r] = fp_divrem(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero() && a.lc() != 1) {
        long inv = mod_inverse(a.lc(), a.p);
        for (auto& x : a.c) x = (x * inv) % a.p;
    }
    return a;
}

FpPoly fp_monic(FpPoly a) {
    if (a.is_zero() || a.lc() == 1) return a;
    long inv = mod_inverse(a.lc(), a.p);
    for (auto& x : a.c) x = (x * inv) % a.p;
    return a;
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r{a.p, {}};
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        r.c[i - 1] = (a.c[i] * (static_cast<long>(i) % a.p)) % a.p;
    r.normalize();
    return r;
}

FpPoly fp_powmod(const FpPoly& a, const mpz_class& e, const FpPoly& m) {
    FpPoly base = fp_divrem(a, m).second;
    FpPoly r{a.p, {1}};
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = fp_divrem(fp_mul(r, base), m).second;
        base = fp_divrem(fp_mul(base, base), m).second;
        k >>= 1;
    }
    return r;
}

FpPoly fp_random(long deg_bound, long p, std::uint64_t& state) {
    FpPoly r{p, {}};
    r.c.resize(deg_bound);
    for (auto& x : r.c) x = static_cast<long>(splitmix64(state) % static_cast<std::uint64_t>(p));
    r.normalize();
    return r;
}

void fp_equal_degree_split(const FpPoly& f, long d, std::uint64_t& state,
                           std::vector<FpPoly>& out) {
    long n = f.degree();
    if (n == d) {
        out.push_back(fp_monic(f));
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), f.p, d);
    mpz_class half = (pd - 1) / 2;
    while (true) {
        FpPoly u = fp_random(n, f.p, state);
        if (u.degree() < 1) continue;
        FpPoly w = fp_powmod(u, half, f);
        FpPoly wm1 = fp_sub(w, FpPoly{f.p, {1}});
        FpPoly g = fp_gcd(f, wm1);
        if (g.degree() > 0 && g.degree() < n) {
            fp_equal_degree_split(g, d, state, out);
            fp_equal_degree_split(fp_divrem(f, g).first, d, state, out);
            return;
        }
    }
}

// monic irreducible factors of a monic square-free f over Fp
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f, std::uint64_t& state) {
    std::vector<FpPoly> out;
    FpPoly rest = fp_monic(f);
    FpPoly x{f.p, {0, 1}};
    FpPoly h = fp_divrem(x, rest).second;
    long d = 0;
    while (rest.degree() > 0) {
        if (rest.degree() < 2 * (d + 1)) {
            out.push_back(rest);
            break;
        }
        ++d;
        h = fp_powmod(h, f.p, rest);
        FpPoly g = fp_gcd(rest, fp_sub(h, fp_divrem(x, rest).second));
        if (g.degree() > 0) {
            fp_equal_degree_split(g, d, state, out);
            rest = fp_divrem(rest, g).first;
            h = fp_divrem(h, rest).second;
        }
    }
    return out;
}

// extended Euclid mod p: s*g + t*h = 1 with deg s < deg h, deg t < deg g
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& g, const FpPoly& h) {
    long p = g.p;
    FpPoly r0 = g, r1 = h;
    FpPoly s0{p, {1}}, s1{p, {}};
    FpPoly t0{p, {}}, t1{p, {1}};
    while (!r1.is_zero()) {
        auto [q, r] = fp_divrem(r0, r1);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw PreconditionError("fp_bezout: inputs not coprime");
    long inv = mod_inverse(r0.lc(), p);
    for (auto& x : s0.c) x = (x * inv) % p;
    for (auto& x : t0.c) x = (x * inv) % p;
    // normalize degrees: s mod h, then t = (1 - s g)/h
    s0 = fp_divrem(s0, h).second;
    FpPoly one{p, {1}};
    FpPoly num = fp_sub(one, fp_mul(s0, g));
    auto [t, rr] = fp_divrem(num, h);
    if (!rr.is_zero()) throw PreconditionError("fp_bezout: internal error");
    return {s0, t};
}

// ------------------------------------------------------------------
// polynomial arithmetic mod m (m = p^(2^j)), coefficients in [0, m)

IntPoly zm_reduce(const IntPoly& f, const mpz_class& m) {
    std::vector<mpz_class> v(f.coeffs());
    for (auto& x : v) {
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    return IntPoly(std::move(v));
}

IntPoly zm_symmetric(const IntPoly& f, const mpz_class& m) {
    std::vector<mpz_class> v(zm_reduce(f, m).coeffs());
    mpz_class half = m / 2;
    for (auto& x : v)
        if (x > half) x -= m;
    return IntPoly(std::move(v));
}

IntPoly zm_mul(const IntPoly& a, const IntPoly& b, const mpz_class& m) {
    return zm_reduce(a * b, m);
}

IntPoly zm_sub(const IntPoly& a, const IntPoly& b, const mpz_class& m) {
    return zm_reduce(a - b, m);
}

// division by a monic divisor, coefficients mod m
std::pair<IntPoly, IntPoly> zm_divrem_monic(const IntPoly& a, const IntPoly& b,
                                            const mpz_class& m) {
    if (b.is_zero() || b.lc() != 1)
        throw PreconditionError("zm_divrem_monic: divisor must be monic");
    std::vector<mpz_class> r(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {IntPoly(), a};
    std::vector<mpz_class> q(da - db + 1, mpz_class(0));
    for (long k = da; k >= db; --k) {
        mpz_class t = r[k];
        mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        if (t == 0) continue;
        q[k - db] = t;
        for (long j = 0; j <= db; ++j) {
            r[k - db + j] -= t * b.at(j);
            mpz_mod(r[k - db + j].get_mpz_t(), r[k - db + j].get_mpz_t(), m.get_mpz_t());
        }
    }
    return {IntPoly(std::move(q)), zm_reduce(IntPoly(std::move(r)), m)};
}

// ------------------------------------------------------------------
// Hensel lifting along a binary tree of modular factors

struct HenselNode {
    IntPoly g, h;  // current split, mod m (g, h monic)
    IntPoly s, t;  // bezout: s g + t h = 1 mod m
    std::unique_ptr<HenselNode> left, right;
    int leaf_index = -1;
};

std::unique_ptr<HenselNode> build_tree(const std::vector<FpPoly>& factors, int lo, int hi) {
    auto node = std::make_unique<HenselNode>();
    if (hi - lo == 1) {
        node->leaf_index = lo;
        return node;
    }
    int mid = (lo + hi) / 2;
    long p = factors[lo].p;
    FpPoly gp{p, {1}}, hp{p, {1}};
    for (int i = lo; i < mid; ++i) gp = fp_mul(gp, factors[i]);
    for (int i = mid; i < hi; ++i) hp = fp_mul(hp, factors[i]);
    auto [s, t] = fp_bezout(gp, hp);
    node->g = fp_to_int(gp);
    node->h = fp_to_int(hp);
    node->s = fp_to_int(s);
    node->t = fp_to_int(t);
    node->left = build_tree(factors, lo, mid);
    node->right = build_tree(factors, mid, hi);
    return node;
}

// one quadratic step m -> m^2 for the whole tree; f monic, f == node
// product mod m
void hensel_pass(HenselNode& node, const IntPoly& f, const mpz_class& m, const mpz_class& m2,
                 std::vector<IntPoly>& leaves) {
    if (node.leaf_index >= 0) {
        leaves[node.leaf_index] = f;
        return;
    }
    const IntPoly &g = node.g, &h = node.h, &s = node.s, &t = node.t;
    IntPoly e = zm_sub(f, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divrem_monic(zm_mul(s, e, m2), h, m2);
    (void)q;
    IntPoly h2 = zm_reduce(h + r, m2);
    auto [g2, rem] = zm_divrem_monic(f, h2, m2);
    if (!zm_reduce(rem, m2).is_zero())
        throw PreconditionError("hensel_pass: lift failed (internal)");
    // lift the bezout pair
    IntPoly b = zm_sub(zm_reduce(zm_mul(node.s, g2, m2) + zm_mul(node.t, h2, m2), m2),
                       IntPoly::constant(1), m2);
    auto [c, d] = zm_divrem_monic(zm_mul(s, b, m2), h2, m2);
    IntPoly s2 = zm_sub(s, d, m2);
    IntPoly t2 = zm_sub(t, zm_reduce(zm_mul(t, b, m2) + zm_mul(c, g2, m2), m2), m2);
    node.g = g2;
    node.h = h2;
    node.s = s2;
    node.t = t2;
    hensel_pass(*node.left, g2, m, m2, leaves);
    hensel_pass(*node.right, h2, m, m2, leaves);
}

// ------------------------------------------------------------------
// Zassenhaus driver for monic square-free input

const long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                        43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::uint64_t degree_mask(const std::vector<FpPoly>& factors) {
    std::uint64_t sums = 1;
    for (const auto& f : factors) {
        long d = f.degree();
        if (d >= 64) return ~std::uint64_t(0);
        sums |= sums << d;
    }
    return sums;
}

mpz_class factor_coeff_bound(const IntPoly& f) {
    // Mignotte: any monic factor of monic f has |coeff| <= 2^deg(f) * ||f||_2
    mpz_class norm2 = f.squared_l2_norm();
    mpz_class root = sqrt(norm2) + 1;
    return (mpz_class(1) << f.degree()) * root;
}

std::vector<IntPoly> zassenhaus_monic_squarefree(const IntPoly& f, std::uint64_t seed) {
    long n = f.degree();
    if (n == 1) return {f};

    // scan small primes where f stays square-free; collect degree patterns
    std::uint64_t state = seed ^ 0xa02bdbf7bb3c0a7ULL;
    for (const auto& x : f.coeffs())
        state = state * 6364136223846793005ULL + mpz_class(x % 1000003).get_si() + 17;

    std::uint64_t allowed = ~std::uint64_t(0);
    long best_p = 0;
    std::vector<FpPoly> best_factors;
    int usable = 0;
    for (long p : kPrimes) {
        FpPoly fp = fp_from(f, p);
        if (fp.degree() != n) continue;  // p divides lc (impossible for monic)
        if (fp_gcd(fp, fp_derivative(fp)).degree() != 0) continue;
        std::uint64_t st = state ^ static_cast<std::uint64_t>(p);
        std::vector<FpPoly> factors = fp_factor_squarefree(fp, st);
        allowed &= degree_mask(factors);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++usable >= 4 || best_factors.size() == 1) break;
    }
    if (best_p == 0)
        throw PreconditionError("factor_z: no usable prime found (pathological input)");
    if (best_factors.size() == 1) return {f};
    {
        // degrees other than 0 and n ruled out at every prime -> irreducible
        std::uint64_t interior = allowed & ~((std::uint64_t(1) << n) | 1);
        if (n < 64 && interior == 0) return {f};
    }

    // Hensel lift to p^(2^j) > 2 * coefficient bound
    mpz_class bound = factor_coeff_bound(f);
    mpz_class target = 2 * bound + 1;
    auto tree = build_tree(best_factors, 0, static_cast<int>(best_factors.size()));
    std::vector<IntPoly> lifted(best_factors.size());
    for (std::size_t i = 0; i < best_factors.size(); ++i) lifted[i] = fp_to_int(best_factors[i]);
    mpz_class m(best_p);
    while (m < target) {
        mpz_class m2 = m * m;
        hensel_pass(*tree, zm_reduce(f, m2), m, m2, lifted);
        m = m2;
    }

    // subset recombination
    std::vector<IntPoly> result;
    std::vector<int> live(best_factors.size());
    std::iota(live.begin(), live.end(), 0);
    IntPoly rest = f;
    mpz_class modulus = m;

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        long dsum = 0;
        for (int i : subset) dsum += lifted[i].degree();
        if (dsum >= 64 || !((allowed >> dsum) & 1)) return false;
        IntPoly cand = IntPoly::constant(1);
        for (int i : subset) cand = zm_mul(cand, lifted[i], modulus);
        cand = zm_symmetric(cand, modulus);
        // cheap filter: the constant term must divide rest(0)
        mpz_class c0 = cand.at(0);
        if (c0 == 0) return false;
        mpz_class r0 = rest.at(0);
        if (!mpz_divisible_p(r0.get_mpz_t(), c0.get_mpz_t())) return false;
        if (cand.max_abs_coeff() > factor_coeff_bound(rest)) return false;
        if (!divides(cand, rest)) return false;
        result.push_back(cand);
        rest = divexact(rest, cand);
        std::vector<int> remaining;
        for (int i : live)
            if (std::find(subset.begin(), subset.end(), i) == subset.end())
                remaining.push_back(i);
        live = std::move(remaining);
        return true;
    };

    for (std::size_t card = 1; card <= live.size() / 2;) {
        // enumerate cardinality-card subsets of live in lexicographic order
        bool found = false;
        std::vector<std::size_t> idx(card);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<int> subset;
            subset.reserve(card);
            for (auto k : idx) subset.push_back(live[k]);
            if (try_subset(subset)) {
                found = true;
                break;
            }
            // next combination
            long pos = static_cast<long>(card) - 1;
            while (pos >= 0 && idx[pos] == live.size() - card + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (std::size_t j = pos + 1; j < card; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++card;  // nothing of this size: try bigger subsets
    }
    if (rest.degree() > 0) result.push_back(rest);
    return result;
}

// substitute y = lc * x to make a primitive polynomial monic:
// lc^(deg-1) * f(y / lc) has coefficients f_k * lc^(deg-1-k), leading 1
IntPoly monic_scale(const IntPoly& f, const mpz_class& lc) {
    long n = f.degree();
    std::vector<mpz_class> w(n + 1);
    w[n] = 1;
    mpz_class acc = 1;
    for (long k = n - 1; k >= 0; --k) {
        w[k] = f.at(k) * acc;
        acc *= lc;
    }
    return IntPoly(std::move(w));
}

IntPoly monic_unscale(const IntPoly& g, const mpz_class& lc) {
    // primitive part of g(lc * x)
    long n = g.degree();
    std::vector<mpz_class> v(n + 1);
    mpz_class power = 1;
    for (long k = 0; k <= n; ++k) {
        v[k] = g.at(k) * power;
        power *= lc;
    }
    return IntPoly(std::move(v)).primitive_part();
}

// Yun's square-free decomposition over Z; input primitive, positive lc
std::vector<std::pair<IntPoly, int>> yun_square_free(const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1) return out;
    IntPoly df = f.derivative();
    IntPoly a0 = gcd(f, df);
    if (a0.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly b = divexact(f, a0);
    IntPoly c = divexact(df, a0);
    int i = 1;
    while (b.degree() > 0) {
        IntPoly d = c - b.derivative();
        if (d.is_zero()) {
            out.emplace_back(b, i);
            break;
        }
        IntPoly ai = gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = divexact(b, ai);
        c = divexact(d, ai);
        ++i;
    }
    return out;
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long k = 0; k <= a.degree(); ++k) {
        if (a.at(k) != b.at(k)) return a.at(k) < b.at(k);
    }
    return false;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_z(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw PreconditionError("factor_z: zero polynomial");
    if (p.content() != 1 || sign(p.lc()) < 0)
        throw PreconditionError("factor_z: input must be primitive with positive leading coefficient");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;

    // powers of x first
    IntPoly f = p;
    int xmult = 0;
    while (f.at(0) == 0) {
        f = divexact(f, IntPoly::x());
        ++xmult;
    }
    if (xmult > 0) out.emplace_back(IntPoly::x(), xmult);

    for (const auto& [part, mult] : yun_square_free(f)) {
        IntPoly q = part;
        std::vector<IntPoly> irreducibles;
        if (q.degree() < 1) continue;
        if (q.is_monic()) {
            irreducibles = zassenhaus_monic_squarefree(q, seed);
        } else {
            mpz_class lc = q.lc();
            IntPoly scaled = monic_scale(q, lc);
            for (const auto& g : zassenhaus_monic_squarefree(scaled, seed))
                irreducibles.push_back(monic_unscale(g, lc));
        }
        for (auto& irr : irreducibles) out.emplace_back(std::move(irr), mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

bool is_irreducible_z(const IntPoly& p, std::uint64_t seed) {
    if (p.is_zero() || p.degree() < 1) return false;
    IntPoly pp = p.primitive_part();
    if (pp != p && -pp != p) return false;  // nontrivial content
    auto factors = factor_z(pp, seed);
    return factors.size() == 1 && factors[0].second == 1;
}

}  // namespace salem
