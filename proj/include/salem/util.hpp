#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace salem {

// Thrown when textual input (polynomial strings, CLI arguments, JSON
// specs) cannot be parsed.  CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an operation's precondition is violated (division by the
// zero polynomial, modulus mismatch, non-tree graph, ...).  Exit code 3.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an interval refinement hits the precision cap without
// reaching a decision.  Exit code 4.  Verdicts are never guessed.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// Refinement/escalation schedule.  Passed by parameter, never global.
struct PrecisionPolicy {
    long max_bits = 8192;  // hard cap on -log2(interval width)
};

inline int sign(const mpz_class& x) { return sgn(x); }
inline int sign(const mpq_class& x) { return sgn(x); }

inline mpq_class make_rational(long num, long den = 1) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Parse "p", "p/q" or a decimal literal like "-0.9" into an exact rational.
mpq_class parse_rational(const std::string& s);

// floor/ceil of x * 2^bits, divided back down: dyadic outward rounding.
mpq_class dyadic_floor(const mpq_class& x, unsigned long bits);
mpq_class dyadic_ceil(const mpq_class& x, unsigned long bits);

// Deterministic 64-bit mix; used to seed any internal randomization from
// the input data so results are reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Decimal rendering of an exact rational, round-to-nearest, fixed number
// of significant digits.  Deterministic.
std::string decimal_string(const mpq_class& x, int significant_digits);

}  // namespace salem
