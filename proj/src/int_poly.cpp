#include "salem/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace salem {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const mpz_class& a, std::size_t k) {
    std::vector<mpz_class> v(k + 1, mpz_class(0));
    v[k] = a;
    return IntPoly(std::move(v));
}

const mpz_class& IntPoly::lc() const {
    if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<mpz_class> v(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<mpz_class> v(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * mpz_class(static_cast<long>(i));
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

IntPoly IntPoly::negated_arg() const {
    std::vector<mpz_class> v(c_);
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(const mpz_class& a) const {
    // Horner: p(x+a) built from the top coefficient down
    IntPoly r;
    IntPoly lin({a, 1});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + IntPoly::constant(*it);
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    if (sign(lc()) < 0) g = -g;
    std::vector<mpz_class> v(c_);
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

mpz_class IntPoly::squared_l2_norm() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x * x;
    return s;
}

mpz_class IntPoly::max_abs_coeff() const {
    mpz_class m = 0;
    for (const auto& x : c_) {
        mpz_class a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

QPoly::QPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::lc() const {
    if (is_zero()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator-() const {
    std::vector<mpq_class> v(c_);
    for (auto& x : v) x = -x;
    return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> v(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> v(c_);
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<mpq_class> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * mpq_class(static_cast<long>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return QPoly();
    return *this * (mpq_class(1) / lc());
}

std::pair<IntPoly, mpq_class> QPoly::clear_denominators() const {
    if (is_zero()) return {IntPoly(), mpq_class(1)};
    mpz_class den_lcm = 1;
    for (const auto& x : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x.get_num() * (den_lcm / x.get_den()));
    IntPoly scaled{std::move(v)};
    mpz_class g = scaled.content();
    if (sign(scaled.lc()) < 0) g = -g;
    std::vector<mpz_class> w(scaled.coeffs());
    for (auto& x : w) x /= g;
    mpq_class s(g, den_lcm);
    s.canonicalize();
    return {IntPoly(std::move(w)), s};
}

std::pair<QPoly, QPoly> divrem(const QPoly& p, const QPoly& q) {
    if (q.is_zero()) throw PreconditionError("division by zero polynomial");
    std::vector<mpq_class> r(p.coeffs());
    long dq = q.degree();
    long dr = p.degree();
    if (dr < dq) return {QPoly(), p};
    std::vector<mpq_class> quot(dr - dq + 1, mpq_class(0));
    const mpq_class inv_lc = mpq_class(1) / q.lc();
    for (long k = dr; k >= dq; --k) {
        mpq_class t = r[k] * inv_lc;
        if (t == 0) continue;
        quot[k - dq] = t;
        for (long j = 0; j <= dq; ++j) r[k - dq + j] -= t * q.coeffs()[j];
    }
    return {QPoly(std::move(quot)), QPoly(std::move(r))};
}

std::pair<QPoly, QPoly> divrem(const IntPoly& p, const IntPoly& q) {
    return divrem(QPoly(p), QPoly(q));
}

IntPoly divexact(const IntPoly& p, const IntPoly& q) {
    auto [quot, rem] = divrem(p, q);
    if (!rem.is_zero()) throw PreconditionError("divexact: nonzero remainder");
    std::vector<mpz_class> v;
    v.reserve(quot.coeffs().size());
    for (const auto& x : quot.coeffs()) {
        if (x.get_den() != 1) throw PreconditionError("divexact: quotient not integral");
        v.push_back(x.get_num());
    }
    return IntPoly(std::move(v));
}

bool divides(const IntPoly& q, const IntPoly& p) {
    if (q.is_zero()) return p.is_zero();
    auto [quot, rem] = divrem(p, q);
    (void)quot;
    if (!rem.is_zero()) return false;
    return true;
}

QPoly gcd_monic(const QPoly& p, const QPoly& q) {
    QPoly a = p, b = q;
    while (!b.is_zero()) {
        auto [quot, rem] = divrem(a, b);
        (void)quot;
        a = b;
        b = rem;
    }
    if (a.is_zero()) return a;
    return a.monic();
}

IntPoly gcd(const IntPoly& p, const IntPoly& q) {
    QPoly g = gcd_monic(QPoly(p), QPoly(q));
    return g.clear_denominators().first;
}

IntPoly pow(const IntPoly& p, unsigned long e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = p;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool is_square_free(const IntPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

bool is_reciprocal(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionError("is_reciprocal: zero polynomial");
    const auto& c = p.coeffs();
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        if (c[i] != c[n - 1 - i]) return false;
    return true;
}

IntPoly trace_polynomial(const IntPoly& p) {
    if (p.is_zero() || !p.is_monic() || !is_reciprocal(p) || p.degree() % 2 != 0)
        throw PreconditionError("trace_polynomial: needs a monic reciprocal polynomial of even degree");
    long n = p.degree() / 2;
    // peel off b_k * x^(n-k) (x^2+1)^k from the top, k = n..0
    IntPoly r = p;
    std::vector<mpz_class> b(n + 1, mpz_class(0));
    IntPoly x2p1({1, 0, 1});
    for (long k = n; k >= 0; --k) {
        b[k] = r.at(n + k);
        if (b[k] != 0) r = r - IntPoly::monomial(b[k], n - k) * pow(x2p1, k);
    }
    if (!r.is_zero())
        throw PreconditionError("trace_polynomial: polynomial is not of the form x^n g(x+1/x)");
    return IntPoly(std::move(b));
}

IntPoly expand_trace_polynomial(const IntPoly& g) {
    if (g.is_zero()) return IntPoly();
    long n = g.degree();
    IntPoly x2p1({1, 0, 1});
    IntPoly r;
    for (long k = 0; k <= n; ++k)
        if (g.at(k) != 0) r = r + IntPoly::monomial(g.at(k), n - k) * pow(x2p1, k);
    return r;
}

mpz_class cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    mpz_class m = p.max_abs_coeff();
    mpz_class lc_abs = abs(p.lc());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lc_abs.get_mpz_t());
    return q + 1;
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    chain.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain[chain.size() - 1];
        auto [quot, rem] = divrem(a, b);
        (void)quot;
        if (rem.is_zero()) break;
        // rem == scale * ip with ip primitive; the next chain element is
        // -rem up to a positive factor, so signs are preserved
        auto [ip, scale] = rem.clear_denominators();
        chain.push_back(sign(scale) < 0 ? ip : -ip);
    }
    return chain;
}

long sturm_variations(const std::vector<IntPoly>& chain, const mpq_class& x) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sign(f.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

static int sign_at_inf(const IntPoly& f, bool positive) {
    if (f.is_zero()) return 0;
    int s = sign(f.lc());
    if (!positive && f.degree() % 2 == 1) s = -s;
    return s;
}

static long variations_at_inf(const std::vector<IntPoly>& chain, bool positive) {
    long v = 0;
    int prev = 0;
    for (const auto& f : chain) {
        int s = sign_at_inf(f, positive);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

long sturm_variations_at_neg_inf(const std::vector<IntPoly>& chain) {
    return variations_at_inf(chain, false);
}

long sturm_variations_at_pos_inf(const std::vector<IntPoly>& chain) {
    return variations_at_inf(chain, true);
}

long sturm_count_with_chain(const std::vector<IntPoly>& chain, const mpq_class& lo,
                            const mpq_class& hi) {
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

long sturm_count(const IntPoly& p, const mpq_class& lo, const mpq_class& hi) {
    if (p.is_zero()) throw PreconditionError("sturm_count: zero polynomial");
    if (!(lo < hi)) throw PreconditionError("sturm_count: requires lo < hi");
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw PreconditionError("sturm_count: endpoint is a root");
    auto chain = sturm_chain(p);
    if (chain.back().degree() > 0)
        throw PreconditionError("sturm_count: polynomial is not square-free");
    return sturm_count_with_chain(chain, lo, hi);
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw PreconditionError("isolate_real_roots: zero polynomial");
    std::vector<std::pair<mpq_class, mpq_class>> out;
    if (p.degree() == 0) return out;
    auto chain = sturm_chain(p);
    if (chain.back().degree() > 0)
        throw PreconditionError("isolate_real_roots: polynomial is not square-free");
    mpq_class bound(cauchy_root_bound(p));

    struct Seg {
        mpq_class lo, hi;
        long count;
    };
    std::vector<Seg> work;
    long total = sturm_count_with_chain(chain, -bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        mpq_class mid = (s.lo + s.hi) / 2;
        if (p.eval(mid) == 0) {
            // rational root exactly at the midpoint: wall it off with a
            // shrinking window until the window isolates it
            mpq_class w = (s.hi - s.lo) / 4;
            while (true) {
                mpq_class a = mid - w, b = mid + w;
                if (p.eval(a) != 0 && p.eval(b) != 0 &&
                    sturm_count_with_chain(chain, a, b) == 1) {
                    out.push_back({a, b});
                    long left = sturm_count_with_chain(chain, s.lo, a);
                    long right = sturm_count_with_chain(chain, b, s.hi);
                    if (left > 0) work.push_back({s.lo, a, left});
                    if (right > 0) work.push_back({b, s.hi, right});
                    break;
                }
                w /= 2;
            }
            continue;
        }
        long left = sturm_count_with_chain(chain, s.lo, mid);
        long right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::pair<mpq_class, mpq_class> refine_real_root(const IntPoly& p, mpq_class lo, mpq_class hi,
                                                 const mpq_class& target_width) {
    int slo = sign(p.eval(lo));
    int shi = sign(p.eval(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw PreconditionError("refine_real_root: endpoints must bracket a sign change");
    while (hi - lo > target_width) {
        mpq_class mid = (lo + hi) / 2;
        int sm = sign(p.eval(mid));
        if (sm == 0) {
            // exact rational root: the interval holds no other root, so a
            // symmetric window around mid keeps the bracketing signs
            mpq_class w = (hi - lo) / 8;
            while (w > target_width / 4) w /= 2;
            return {mid - w, mid + w};
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

// ---------------------------------------------------------------------
// text format

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer at position " + std::to_string(start));
        return mpz_class(s.substr(start, i - start));
    }

    // one term: [coeff][*][x[^exp]]
    void parse_term(int term_sign, std::vector<std::pair<mpz_class, unsigned long>>& terms) {
        skip_ws();
        mpz_class coeff = 1;
        bool saw_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coeff = parse_integer();
            saw_coeff = true;
        }
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        unsigned long exp = 0;
        if (i < s.size() && (s[i] == 'x' || s[i] == 'X')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < s.size() && s[i] == '^') {
                ++i;
                mpz_class e = parse_integer();
                if (e < 0 || e > 100000) throw ParseError("exponent out of range");
                exp = e.get_ui();
            }
        } else if (!saw_coeff) {
            throw ParseError("expected term at position " + std::to_string(i));
        }
        if (term_sign < 0) coeff = -coeff;
        terms.emplace_back(coeff, exp);
    }

    IntPoly parse() {
        std::vector<std::pair<mpz_class, unsigned long>> terms;
        int term_sign = 1;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            term_sign = (s[i] == '-') ? -1 : 1;
            ++i;
        }
        parse_term(term_sign, terms);
        while (!done()) {
            char c = peek();
            if (c == '+')
                term_sign = 1;
            else if (c == '-')
                term_sign = -1;
            else
                throw ParseError("unexpected character '" + std::string(1, c) + "'");
            ++i;
            parse_term(term_sign, terms);
        }
        unsigned long maxexp = 0;
        for (const auto& [c, e] : terms) maxexp = std::max(maxexp, e);
        std::vector<mpz_class> v(maxexp + 1, mpz_class(0));
        for (const auto& [c, e] : terms) v[e] += c;
        return IntPoly(std::move(v));
    }
};

IntPoly parse_coeff_array(const std::string& text) {
    std::vector<mpz_class> v;
    std::string cur;
    bool closed = false;
    for (std::size_t i = 1; i < text.size(); ++i) {
        char c = text[i];
        if (c == ']') {
            closed = true;
            if (!cur.empty()) {
                v.emplace_back(cur);
                cur.clear();
            }
            // only whitespace may follow
            for (std::size_t j = i + 1; j < text.size(); ++j)
                if (!std::isspace(static_cast<unsigned char>(text[j])))
                    throw ParseError("trailing characters after ']'");
            break;
        } else if (c == ',') {
            if (cur.empty()) throw ParseError("empty coefficient in array");
            v.emplace_back(cur);
            cur.clear();
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
            cur += c;
        } else {
            throw ParseError("unexpected character in coefficient array");
        }
    }
    if (!closed) throw ParseError("unterminated coefficient array");
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (first >= text.size()) throw ParseError("empty polynomial");
    try {
        if (text[first] == '[') return parse_coeff_array(text.substr(first));
        PolyParser p(text);
        return p.parse();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad polynomial: ") + e.what());
    }
}

std::string format_poly(const IntPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        mpz_class c = p.at(k);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str();
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace salem
