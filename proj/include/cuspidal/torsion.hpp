// Closed-form torsion structure of J(F)_Tor and of the generalized
// Jacobian, away from the small constant a, with per-character and
// per-prime refinements.
#pragma once

#include <vector>

#include "cuspidal/abelian.hpp"
#include "cuspidal/cusp_lattice.hpp"

namespace cuspidal {

// d(e) = prod_i (|p_i| + e(i)).
inline Int d_of_char(const Modulus& mod, const Character& e)
{
    if (e.s() != mod.s()) throw error("d_of_char: rank mismatch");
    Int d = 1;
    for (size_t i = 0; i < mod.s(); ++i) d *= mod.norm_of(i) + e.sign(i);
    return d;
}

inline std::set<Int> a_primes(const Modulus& mod)
{
    return prime_divisors(constants(mod.setting()).a);
}

// M_j = direct sum of Z/d(e) over characters with at least j slots of -1.
inline LocalizedAbelianGroup M_j(const Modulus& mod, unsigned j)
{
    std::vector<Int> orders;
    for (const auto& e : all_characters(mod.s()))
        if (e.weight() >= j) orders.push_back(d_of_char(mod, e));
    return LocalizedAbelianGroup(orders);
}

// J(F)_Tor away from a: M_1 localized at the prime divisors of a.
inline LocalizedAbelianGroup jacobian_torsion(const Modulus& mod)
{
    std::vector<Int> orders;
    for (const auto& e : all_characters(mod.s()))
        if (e.weight() >= 1) orders.push_back(d_of_char(mod, e));
    return LocalizedAbelianGroup(orders, a_primes(mod));
}

// ~J(F)_Tor away from a: M_2 localized likewise.
inline LocalizedAbelianGroup gen_jacobian_torsion(const Modulus& mod)
{
    std::vector<Int> orders;
    for (const auto& e : all_characters(mod.s()))
        if (e.weight() >= 2) orders.push_back(d_of_char(mod, e));
    return LocalizedAbelianGroup(orders, a_primes(mod));
}

// Full order of the cyclic group J(F)_Tor at prime level:
// (|N| - 1) / (k, |N| - 1).
inline Int prime_level_torsion_order(const Modulus& mod)
{
    if (mod.s() != 1) throw error("prime_level_torsion_order: level must be prime (s = 1)");
    Int n = mod.norm_of(0) - 1;
    return n / gcd(constants(mod.setting()).k, n);
}

// Order of the cyclic group C{ell}^e = J(F){ell}^e for odd ell outside the
// excluded set: the ell-part of 1, d(e) or d(e)/b depending on e vs e_H.
inline Int cuspidal_ell_part(const Modulus& mod, const Int& ell, const Character& e)
{
    if (ell < 3 || !is_prime(ell) )
        throw excluded_case("cuspidal_ell_part: ell must be an odd prime");
    const Setting& st = mod.setting();
    const Constants cst = constants(st);
    if (st.is_ff()) {
        if (gcd(ell, Int(st.q()) * (Int(st.q()) - 1)) != 1)
            throw excluded_case("cuspidal_ell_part: ell divides q(q-1), excluded case");
    }
    bool three_divides_level = st.is_nf() && mod.level_nf() % 3 == 0;
    if (st.is_nf() && ell == 3 && three_divides_level)
        throw excluded_case("cuspidal_ell_part: ell = 3 with 3 | N, excluded case");

    if (e.is_one()) return 1;
    Int d = d_of_char(mod, e);
    if (three_divides_level) {
        // e_H is undefined here, but ell >= 5 and b = 3 cannot affect the
        // ell-part, so both branches of the case split agree.
        return ell_part(d, ell);
    }
    Character eh((e_H(mod)));
    if (e == eh) return ell_part(d, ell);
    if (d % cst.b != 0)
        throw error("cuspidal_ell_part: b does not divide d(e), internal inconsistency");
    return ell_part(d / cst.b, ell);
}

// Corollary table for the b-part: M_2' = sum of Z/(d(e)/b) over characters
// outside {1, e_H, e^{(1)}, ..., e^{(s)}}; returns its ell-part.
inline LocalizedAbelianGroup gen_jacobian_ell_part(const Modulus& mod, const Int& ell)
{
    const Setting& st = mod.setting();
    const Constants cst = constants(st);
    if (st.is_nf()) {
        if (ell != 3)
            throw excluded_case("gen_jacobian_ell_part: NF case covers ell = 3 only");
        if (mod.level_nf() % 3 == 0)
            throw excluded_case("gen_jacobian_ell_part: requires (3, N) = 1");
    } else {
        if (ell < 3 || !is_prime(ell) || cst.b % ell != 0)
            throw excluded_case("gen_jacobian_ell_part: ell must be an odd prime divisor of q+1");
    }
    Character eh((e_H(mod)));
    std::vector<Int> orders;
    for (const auto& e : all_characters(mod.s())) {
        if (e.is_one() || e == eh || e.unit_negation_index() != 0) continue;
        Int d = d_of_char(mod, e);
        if (d % cst.b != 0)
            throw error("gen_jacobian_ell_part: b does not divide d(e), internal inconsistency");
        orders.push_back(ell_part(d / cst.b, ell));
    }
    return LocalizedAbelianGroup(orders);
}

// Per-character orders of M^e and ~M^e away from a.
struct EPartEntry {
    Character e;
    Int m_order;      // e-part of J(F)_Tor (x) Z[1/a]
    Int mtilde_order; // e-part of ~J(F)_Tor (x) Z[1/a]
};

struct EPartTable {
    std::vector<EPartEntry> entries; // character order: lexicographic
    std::set<Int> inverted;
};

inline EPartTable epart_table(const Modulus& mod)
{
    EPartTable out;
    out.inverted = a_primes(mod);
    for (const auto& e : all_characters(mod.s())) {
        EPartEntry row{e, 1, 1};
        if (!e.is_one()) {
            Int d = strip_primes(d_of_char(mod, e), out.inverted);
            row.m_order = d;
            row.mtilde_order = e.weight() >= 2 ? d : Int(1);
        }
        out.entries.push_back(std::move(row));
    }
    return out;
}

} // namespace cuspidal
