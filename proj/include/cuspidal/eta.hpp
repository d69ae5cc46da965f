// Classical-side verification engine: exact q-expansions and cusp orders
// of the products prod_m Delta(m tau)^{r_m}, and the reconstruction of the
// cuspidal divisor class group away from 6 by lattice SNF.
#pragma once

#include <cstdlib>
#include <map>

#include "cuspidal/delta.hpp"
#include "cuspidal/qseries.hpp"

namespace cuspidal {

// Exponent vector of prod_{m | N} Delta(m tau)^{r_m}.
struct EtaQuotient {
    std::map<Int, int> r; // divisor m -> exponent

    int exponent_at(const Int& m) const
    {
        auto it = r.find(m);
        return it == r.end() ? 0 : it->second;
    }
};

// Delta^e: exponent <e, w> at m(w).
inline EtaQuotient eta_quotient_of_char(const Modulus& mod, const Character& e)
{
    if (!mod.setting().is_nf()) throw error("eta_quotient_of_char: NF only");
    EtaQuotient out;
    for (WElem w = 0; w < (WElem(1) << mod.s()); ++w)
        out.r[m_of_w_nf(mod, w)] = pairing(e, w);
    return out;
}

inline size_t default_truncation(const Modulus& mod)
{
    if (const char* env = std::getenv("CUSPIDAL_TRUNC")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<size_t>(v);
    }
    return static_cast<size_t>(8 * static_cast<long long>(mod.level_nf()));
}

// Leading q-exponent of the expanded product, witnessed by multiplying the
// dilated series out to order T and scanning for the first surviving
// coefficient.  Equals sum_m m * r_m when T is large enough.
inline long long ord_at_infinity(const Modulus& mod, const EtaQuotient& E, size_t T)
{
    RawSeries num{Int(1)}, den{Int(1)};
    num.resize(T + 1, 0);
    den.resize(T + 1, 0);
    bool have_num = false, have_den = false;
    for (auto& [m, rm] : E.r) {
        if (rm == 0) continue;
        RawSeries factor = raw_delta_dilated(T, static_cast<unsigned long>(m));
        for (int c = 0; c < std::abs(rm); ++c) {
            if (rm > 0) {
                num = raw_mul(num, factor);
                have_num = true;
            } else {
                den = raw_mul(den, factor);
                have_den = true;
            }
        }
    }
    long long lead_num = have_num ? raw_leading_exponent(num) : 0;
    long long lead_den = have_den ? raw_leading_exponent(den) : 0;
    return lead_num - lead_den;
}

// Vanishing orders at all cusps from the classical eta-quotient cusp-order
// formula on Gamma_0(N):  ord at the cusp of denominator c (squarefree N)
// of prod Delta(m tau)^{r_m} is (N/c) * sum_m gcd(c,m)^2 r_m / m.
// Cusp [w] corresponds to denominator c = m(w).
inline CuspDivisor ligozat_orders(const Modulus& mod, const EtaQuotient& E)
{
    if (!mod.setting().is_nf()) throw error("ligozat_orders: NF only");
    Int N = mod.level_nf();
    CuspDivisor out(mod.s());
    for (WElem w = 0; w < (WElem(1) << mod.s()); ++w) {
        Int c = m_of_w_nf(mod, w);
        Rat acc(0);
        for (auto& [m, rm] : E.r) {
            if (rm == 0) continue;
            Int g = gcd(c, m);
            acc += Rat(g * g * rm, m);
        }
        Rat ord = Rat(N, c) * acc;
        if (denominator_of(ord) != 1)
            throw error("ligozat_orders: non-integral cusp order");
        out.c[w] = boost::multiprecision::numerator(ord);
    }
    return out;
}

// Cuspidal divisor class group away from 6: SNF of D2 modulo the lattice
// spanned by the divisors of the Delta^e, each computed by the cusp-order
// formula above (not by the closed form d(e) D^e).
inline LocalizedAbelianGroup cuspidal_group_oracle(const Modulus& mod)
{
    if (!mod.setting().is_nf()) throw error("cuspidal_group_oracle: NF only");
    size_t s = mod.s();
    size_t r = (size_t(1) << s) - 1;
    std::vector<std::vector<Int>> cols;
    for (const auto& e : all_characters(s)) {
        if (e.is_one()) continue;
        CuspDivisor div = ligozat_orders(mod, eta_quotient_of_char(mod, e));
        cols.push_back(expand_in_d2_basis(div));
    }
    IntMatrix G(r, cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t row = 0; row < r; ++row) G(row, j) = cols[j][row];
    return LocalizedAbelianGroup(quotient_invariants(G), {Int(2), Int(3)});
}

} // namespace cuspidal
