// Exact integer and rational helpers shared by all modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuspidal {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Library-level error categories.  "excluded_case" marks inputs the
// underlying theorems do not cover; callers must not coerce it into a value.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct excluded_case : error {
    using error::error;
};
struct undefined_value : error {
    using error::error;
};

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

inline Int pow(const Int& base, unsigned long e)
{
    return boost::multiprecision::pow(base, e);
}

// Trial-division factorization; adequate for desk-scale operands
// (norms, d(e) values, levels below 2^63).
inline std::map<Int, unsigned> factorize(Int n)
{
    if (n < 0) n = -n;
    if (n == 0) throw error("factorize: zero has no factorization");
    std::map<Int, unsigned> out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

inline bool is_prime(const Int& n)
{
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

inline std::set<Int> prime_divisors(const Int& n)
{
    std::set<Int> out;
    for (auto& [p, e] : factorize(n)) out.insert(p);
    return out;
}

// Largest power of ell dividing n.
inline Int ell_part(Int n, const Int& ell)
{
    if (n == 0) throw error("ell_part of zero");
    if (n < 0) n = -n;
    Int out = 1;
    while (n % ell == 0) {
        out *= ell;
        n /= ell;
    }
    return out;
}

// Strip from n every prime factor belonging to S.
inline Int strip_primes(Int n, const std::set<Int>& S)
{
    if (n < 0) n = -n;
    for (const Int& p : S)
        while (n % p == 0) n /= p;
    return n;
}

// Fraction reduced into [0, 1); the canonical representative in Q/Z.
inline Rat mod_one(const Rat& x)
{
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int r = num % den;
    if (r < 0) r += den;
    return Rat(r, den);
}

inline Int denominator_of(const Rat& x) { return boost::multiprecision::denominator(x); }

} // namespace cuspidal
