// The connecting map delta: J(F)_Tor -> D3 (x) F^x (x) Q/Z evaluated on
// cuspidal classes.  Images are supported on monomials in the level primes
// with exponents in Q/Z, normalized by the D3 diagonal relation.
#pragma once

#include <map>
#include <vector>

#include "cuspidal/cusp_lattice.hpp"
#include "cuspidal/torsion.hpp"

namespace cuspidal {

// Element of D3 (x) F^x (x) Q/Z restricted to monomials in the level
// primes.  slots[i] is the vector over W of exponents of p_{i+1}; the
// canonical form zeroes the w = 0 slot (diagonal relation) and reduces
// every exponent into [0, 1).
class DeltaImage {
public:
    DeltaImage() = default;
    explicit DeltaImage(size_t s) : s_(s) {}

    size_t s() const { return s_; }
    const std::map<size_t, std::vector<Rat>>& slots() const { return slots_; }

    // add x [w] (x) p_{i+1} (x) q to the representative
    void add_term(size_t prime_index, WElem w, const Rat& q)
    {
        auto& v = slot(prime_index);
        v[w] = mod_one(v[w] + q);
        normalize();
    }

    DeltaImage operator+(const DeltaImage& o) const
    {
        if (s_ != o.s_) throw error("DeltaImage: rank mismatch");
        DeltaImage r = *this;
        for (auto& [i, v] : o.slots_) {
            auto& mine = r.slot(i);
            for (size_t w = 0; w < v.size(); ++w) mine[w] = mod_one(mine[w] + v[w]);
        }
        r.normalize();
        return r;
    }

    DeltaImage operator*(const Int& n) const
    {
        DeltaImage r(s_);
        for (auto& [i, v] : slots_) {
            auto& mine = r.slot(i);
            for (size_t w = 0; w < v.size(); ++w) mine[w] = mod_one(Rat(n) * v[w]);
        }
        r.normalize();
        return r;
    }

    bool is_zero() const
    {
        for (auto& [i, v] : slots_)
            for (auto& q : v)
                if (q != 0) return false;
        return true;
    }

    bool operator==(const DeltaImage& o) const
    {
        if (s_ != o.s_) return false;
        DeltaImage a = *this, b = o;
        a.prune();
        b.prune();
        return a.slots_ == b.slots_;
    }

    // Order in Q/Z: lcm of the exponent denominators of the canonical form.
    Int order() const
    {
        Int out = 1;
        for (auto& [i, v] : slots_)
            for (auto& q : v) out = lcm(out, denominator_of(q));
        return out;
    }

private:
    size_t s_ = 0;
    std::map<size_t, std::vector<Rat>> slots_; // prime index (0-based) -> W vector

    std::vector<Rat>& slot(size_t i)
    {
        auto it = slots_.find(i);
        if (it == slots_.end())
            it = slots_.emplace(i, std::vector<Rat>(size_t(1) << s_, Rat(0))).first;
        return it->second;
    }

    void normalize()
    {
        for (auto& [i, v] : slots_) {
            Rat base = v[0];
            if (base == 0) continue;
            for (auto& q : v) q = mod_one(q - base);
        }
    }

    void prune()
    {
        for (auto it = slots_.begin(); it != slots_.end();) {
            bool zero = true;
            for (auto& q : it->second)
                if (q != 0) { zero = false; break; }
            it = zero ? slots_.erase(it) : std::next(it);
        }
    }
};

// The constant c(e, w): p_i^{-2^{s-1} k} when e = e^{(i)} and w_i = 1,
// otherwise 1.  Returned in factored form.
struct PrimePower {
    bool trivial = true;
    size_t prime_index = 0; // 0-based
    Int exponent = 0;
};

inline PrimePower c_constant(const Modulus& mod, const Character& e, WElem w)
{
    if (e.is_one()) throw error("c_constant: e = 1 not allowed");
    size_t i = e.unit_negation_index();
    if (i == 0 || !((w >> (i - 1)) & 1)) return {};
    Int k = constants(mod.setting()).k;
    return {false, i - 1, -(Int(1) << (mod.s() - 1)) * k};
}

// Lemma-level bookkeeping: ord_{p_i} of prod_{w'} gcd(m(w'), m(w))^{<e,w'>}.
// Must equal -2^{s-1} exactly when e = e^{(i)} and w_i = 1, else 0; so
// c(e,w) equals this gcd-product raised to the power k.
inline Int c_exponent_via_gcd_product(const Modulus& mod, const Character& e, WElem w, size_t i)
{
    Int total = 0;
    for (WElem wp = 0; wp < (WElem(1) << mod.s()); ++wp)
        if (((wp & w) >> i) & 1) total += pairing(e, wp);
    return total;
}

// Order of delta([D^e]): d(e^{(i)}) / (d(e^{(i)}), 2^{s-1} k) when e = e^{(i)},
// otherwise 1.
inline Int delta_order_De(const Modulus& mod, const Character& e)
{
    if (e.is_one()) throw error("delta_order_De: e = 1 not allowed");
    size_t i = e.unit_negation_index();
    if (i == 0) return 1;
    Int d = d_of_char(mod, e);
    Int m = (Int(1) << (mod.s() - 1)) * constants(mod.setting()).k;
    return d / gcd(d, m);
}

// delta(D^{e^{(i)}}) = sum_{w_i = 0} [w] (x) p_i (x) (-2^{s-1} k / d(e^{(i)})).
inline DeltaImage delta_image_De(const Modulus& mod, size_t i)
{
    if (i < 1 || i > mod.s()) throw error("delta_image_De: index out of range");
    DeltaImage img(mod.s());
    Int d = d_of_char(mod, Character::unit_negation(mod.s(), i));
    Rat q = Rat(-(Int(1) << (mod.s() - 1)) * constants(mod.setting()).k, d);
    for (WElem w = 0; w < (WElem(1) << mod.s()); ++w)
        if (!((w >> (i - 1)) & 1)) img.add_term(i - 1, w, q);
    return img;
}

// delta([1/m] - [1/(m p_i)]) for m | N/p_i; independent of m.
inline std::pair<DeltaImage, Int> delta_basis_element(const Modulus& mod, size_t i, WElem m_mask)
{
    if (i < 1 || i > mod.s()) throw error("delta_basis_element: index out of range");
    if ((m_mask >> (i - 1)) & 1) throw error("delta_basis_element: m must divide N/p_i");
    if (m_mask >= (WElem(1) << mod.s())) throw error("delta_basis_element: bad divisor mask");
    DeltaImage img(mod.s());
    Int d = d_of_char(mod, Character::unit_negation(mod.s(), i));
    Rat q = Rat(-constants(mod.setting()).k, d);
    for (WElem w = 0; w < (WElem(1) << mod.s()); ++w)
        if (!((w >> (i - 1)) & 1)) img.add_term(i - 1, w, q);
    return {img, d / gcd(d, constants(mod.setting()).k)};
}

// delta on an arbitrary element of D2, by expansion in the standard basis.
inline DeltaImage delta_of(const Modulus& mod, const CuspDivisor& d)
{
    if (d.s != mod.s()) throw error("delta_of: rank mismatch");
    if (d.degree() != 0) throw error("delta_of: divisor must have degree zero");
    auto coords = expand_in_d2_basis(d);
    auto basis = d2_basis(mod.s());
    DeltaImage img(mod.s());
    for (size_t j = 0; j < basis.size(); ++j) {
        if (coords[j] == 0) continue;
        img = img + delta_basis_element(mod, basis[j].i, basis[j].m).first * coords[j];
    }
    return img;
}

// Generators of C /\ ker(delta): the difference family and the scaled
// prime-slice family.
inline std::vector<CuspDivisor> kernel_generators(const Modulus& mod)
{
    size_t s = mod.s();
    std::vector<CuspDivisor> out;
    for (const auto& b : d2_basis(s)) {
        if (b.m == 0) continue; // [1]-[1/p_i]-[1]+[1/p_i] vanishes
        CuspDivisor d(s);
        WElem bit = WElem(1) << (b.i - 1);
        d.c[0] += 1;
        d.c[bit] -= 1;
        d.c[b.m] -= 1;
        d.c[b.m | bit] += 1;
        out.push_back(std::move(d));
    }
    Int k = constants(mod.setting()).k;
    for (size_t i = 1; i <= s; ++i) {
        Int di = d_of_char(mod, Character::unit_negation(s, i));
        CuspDivisor d(s);
        d.c[0] = 1;
        d.c[WElem(1) << (i - 1)] = -1;
        out.push_back(d * (di / gcd(di, k)));
    }
    return out;
}

// Structure of (C /\ ker delta) (x) Z[1/a], computed as a lattice quotient
// inside D2: principal lattice P = <d(e) D^e>, kernel lattice K + P.
inline LocalizedAbelianGroup kerdelta_group_reconstruction(const Modulus& mod)
{
    size_t s = mod.s();
    size_t r = (size_t(1) << s) - 1;
    // P generators in D2 coordinates
    std::vector<std::vector<Int>> pcols;
    for (const auto& e : all_characters(s)) {
        if (e.is_one()) continue;
        auto coords = expand_in_d2_basis(D_e(e));
        Int d = d_of_char(mod, e);
        for (auto& x : coords) x *= d;
        pcols.push_back(std::move(coords));
    }
    std::vector<std::vector<Int>> kcols = pcols;
    for (const auto& g : kernel_generators(mod)) kcols.push_back(expand_in_d2_basis(g));

    IntMatrix G1(r, pcols.size()), G2(r, kcols.size());
    for (size_t j = 0; j < pcols.size(); ++j)
        for (size_t row = 0; row < r; ++row) G1(row, j) = pcols[j][row];
    for (size_t j = 0; j < kcols.size(); ++j)
        for (size_t row = 0; row < r; ++row) G2(row, j) = kcols[j][row];

    return LocalizedAbelianGroup(lattice_quotient_invariants(G2, G1), a_primes(mod));
}

} // namespace cuspidal
