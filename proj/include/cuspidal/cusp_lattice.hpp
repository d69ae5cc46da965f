// Cusp combinatorics for squarefree level: the group W = (Z/2)^s indexing
// the cusps, sign characters, the divisor lattices D1 < D2 < D and the
// quotient D3, and the Atkin-Lehner translation action.
//
// A W-element is a bitmask w in [0, 2^s); bit i corresponds to p_{i+1}.
// The cusp [w] is [1/m(w)] with m(w) the product of the selected primes.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cuspidal/abelian.hpp"
#include "cuspidal/base_ring.hpp"
#include "cuspidal/matrix.hpp"

namespace cuspidal {

using WElem = unsigned; // bitmask of length s

class Character {
public:
    Character() = default;
    explicit Character(SignVec signs) : e_(std::move(signs))
    {
        for (int v : e_)
            if (v != 1 && v != -1) throw error("Character: entries must be +-1");
    }

    static Character one(size_t s) { return Character(SignVec(s, +1)); }

    // e^{(i)}: -1 in slot i (1-based), +1 elsewhere.
    static Character unit_negation(size_t s, size_t i)
    {
        if (i < 1 || i > s) throw error("Character: index out of range");
        SignVec v(s, +1);
        v[i - 1] = -1;
        return Character(std::move(v));
    }

    static Character parse(const std::string& text)
    {
        SignVec v;
        for (char c : text) {
            if (c == '+') v.push_back(+1);
            else if (c == '-') v.push_back(-1);
            else throw error("Character: bad sign string '" + text + "'");
        }
        return Character(std::move(v));
    }

    size_t s() const { return e_.size(); }
    int sign(size_t i) const { return e_.at(i); } // 0-based slot
    const SignVec& signs() const { return e_; }

    bool is_one() const
    {
        return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 1; });
    }

    // |e^{-1}(-1)|
    size_t weight() const
    {
        return static_cast<size_t>(std::count(e_.begin(), e_.end(), -1));
    }

    // index i (1-based) if this is e^{(i)}, else 0
    size_t unit_negation_index() const
    {
        if (weight() != 1) return 0;
        for (size_t i = 0; i < e_.size(); ++i)
            if (e_[i] == -1) return i + 1;
        return 0;
    }

    std::string str() const
    {
        std::string out;
        for (int v : e_) out += (v == 1 ? '+' : '-');
        return out;
    }

    bool operator==(const Character& o) const { return e_ == o.e_; }
    bool operator!=(const Character& o) const { return e_ != o.e_; }
    bool operator<(const Character& o) const { return str() < o.str(); }

private:
    SignVec e_;
};

// All 2^s characters in lexicographic sign-string order ("+" < "-").
inline std::vector<Character> all_characters(size_t s)
{
    std::vector<Character> out;
    out.reserve(size_t(1) << s);
    for (WElem mask = 0; mask < (WElem(1) << s); ++mask) {
        SignVec v(s);
        for (size_t i = 0; i < s; ++i) v[i] = (mask >> i) & 1 ? -1 : +1;
        out.emplace_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// <e, w> = prod of e_i over the set bits of w.
inline int pairing(const Character& e, WElem w)
{
    if (w >= (WElem(1) << e.s())) throw error("pairing: W element out of range");
    int out = 1;
    for (size_t i = 0; i < e.s(); ++i)
        if ((w >> i) & 1) out *= e.sign(i);
    return out;
}

// m(w) as an integer (NF only).
inline Int m_of_w_nf(const Modulus& mod, WElem w)
{
    Int m = 1;
    for (size_t i = 0; i < mod.s(); ++i)
        if ((w >> i) & 1) m *= mod.prime(i).integer();
    return m;
}

// |m(w)| = prod |p_i| over the set bits; valid in both settings.
inline Int norm_of_m(const Modulus& mod, WElem w)
{
    Int m = 1;
    for (size_t i = 0; i < mod.s(); ++i)
        if ((w >> i) & 1) m *= mod.norm_of(i);
    return m;
}

// Element of D = sum of Z[w]; coefficient vector indexed by the mask.
struct CuspDivisor {
    size_t s = 0;
    std::vector<Int> c; // size 2^s

    CuspDivisor() = default;
    explicit CuspDivisor(size_t s_) : s(s_), c(size_t(1) << s_, 0) {}

    size_t size() const { return c.size(); }
    Int degree() const
    {
        Int d = 0;
        for (auto& x : c) d += x;
        return d;
    }
    bool is_zero() const
    {
        return std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
    }

    CuspDivisor operator+(const CuspDivisor& o) const
    {
        check(o);
        CuspDivisor r(s);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    CuspDivisor operator-(const CuspDivisor& o) const
    {
        check(o);
        CuspDivisor r(s);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    CuspDivisor operator*(const Int& n) const
    {
        CuspDivisor r(s);
        for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * n;
        return r;
    }
    CuspDivisor operator-() const { return *this * Int(-1); }
    bool operator==(const CuspDivisor& o) const { return s == o.s && c == o.c; }

private:
    void check(const CuspDivisor& o) const
    {
        if (s != o.s) throw error("CuspDivisor: rank mismatch");
    }
};

// D^e = sum over w of <e,w> [w].
inline CuspDivisor D_e(const Character& e)
{
    CuspDivisor d(e.s());
    for (WElem w = 0; w < d.size(); ++w) d.c[w] = pairing(e, w);
    return d;
}

// W_w permutes cusps by translation: [w'] -> [w + w'].
inline CuspDivisor atkin_lehner(WElem w, const CuspDivisor& d)
{
    if (w >= d.size()) throw error("atkin_lehner: W element out of range");
    CuspDivisor r(d.s);
    for (WElem wp = 0; wp < d.size(); ++wp) r.c[wp ^ w] = d.c[wp];
    return r;
}

// A_s = (<e, w>), rows in character order, columns by mask.
inline IntMatrix pairing_matrix(size_t s)
{
    if (s < 1) throw error("pairing_matrix: s >= 1 required");
    auto chars = all_characters(s);
    size_t n = size_t(1) << s;
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (WElem w = 0; w < n; ++w) m(i, w) = pairing(chars[i], w);
    return m;
}

inline Int pairing_matrix_det(size_t s) { return abs(determinant(pairing_matrix(s))); }

// ---------------------------------------------------------------------------
// The standard Z-basis of D2: { [1/m] - [1/(m p_i)] : i = 1..s, m | N/(p_1...p_i) },
// ordered lexicographically by (i, m).

struct D2BasisElem {
    size_t i;    // 1-based prime index
    WElem m;     // mask of m, supported on bits >= i
};

inline std::vector<D2BasisElem> d2_basis(size_t s)
{
    std::vector<D2BasisElem> out;
    for (size_t i = 1; i <= s; ++i) {
        // masks supported on bits i..s-1 (0-based), enumerated ascending
        WElem high = WElem(1) << (s - i);
        for (WElem lo = 0; lo < high; ++lo) out.push_back({i, lo << i});
    }
    return out;
}

inline CuspDivisor d2_basis_divisor(size_t s, const D2BasisElem& b)
{
    CuspDivisor d(s);
    d.c[b.m] += 1;
    d.c[b.m | (WElem(1) << (b.i - 1))] -= 1;
    return d;
}

// Columns are the basis divisors; 2^s rows.
inline IntMatrix d2_basis_matrix(size_t s)
{
    auto basis = d2_basis(s);
    IntMatrix m(size_t(1) << s, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        CuspDivisor d = d2_basis_divisor(s, basis[j]);
        for (size_t w = 0; w < d.size(); ++w) m(w, j) = d.c[w];
    }
    return m;
}

// Integer coordinates of a degree-zero divisor in the D2 basis.
inline std::vector<Int> expand_in_d2_basis(const CuspDivisor& d)
{
    if (d.degree() != 0) throw error("expand_in_d2_basis: divisor has nonzero degree");
    auto sol = solve_integral(d2_basis_matrix(d.s), d.c);
    if (!sol) throw error("expand_in_d2_basis: divisor not in D2 lattice");
    return *sol;
}

// [D2 : D1] computed by the SNF of the matrix of {D^e : e != 1} in the D2 basis.
inline Int lattice_index_D2_D1(size_t s)
{
    size_t r = (size_t(1) << s) - 1;
    IntMatrix g(r, r);
    size_t col = 0;
    for (const auto& e : all_characters(s)) {
        if (e.is_one()) continue;
        auto coords = expand_in_d2_basis(D_e(e));
        for (size_t row = 0; row < r; ++row) g(row, col) = coords[row];
        ++col;
    }
    auto snf = smith_normal_form(g);
    if (snf.rank() != r) throw error("lattice_index_D2_D1: D1 not of full rank");
    Int idx = 1;
    for (auto& f : snf.factors) idx *= f;
    return idx;
}

// ---------------------------------------------------------------------------
// D3 = D / <sum of all [w]>.  Canonical representative: coefficient at w=0
// is normalized to zero; coordinates are the remaining 2^s - 1 slots.

inline std::vector<Int> d3_coords(const CuspDivisor& d)
{
    std::vector<Int> out(d.size() - 1);
    for (size_t w = 1; w < d.size(); ++w) out[w - 1] = d.c[w] - d.c[0];
    return out;
}

// Cokernel of D2 -> D3 (injective; order must come out as 2^s).
inline LocalizedAbelianGroup coker_D2_to_D3(size_t s)
{
    size_t r = (size_t(1) << s) - 1;
    auto basis = d2_basis(s);
    IntMatrix g(r, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
        auto coords = d3_coords(d2_basis_divisor(s, basis[j]));
        for (size_t row = 0; row < r; ++row) g(row, j) = coords[row];
    }
    return LocalizedAbelianGroup(quotient_invariants(g));
}

// ---------------------------------------------------------------------------
// e-eigencomponent over a ring where 2 is invertible: the image of the
// projector 2^{-s} * sum_w <e,w> W_w.

inline std::vector<Rat> e_part(const CuspDivisor& d, const Character& e, const std::set<Int>& inverted)
{
    if (!inverted.count(2))
        throw error("e_part: requires 2 to be inverted");
    if (e.s() != d.s) throw error("e_part: rank mismatch");
    std::vector<Rat> out(d.size(), Rat(0));
    Rat scale(1, Int(1) << d.s);
    for (WElem w = 0; w < d.size(); ++w) {
        CuspDivisor moved = atkin_lehner(w, d);
        int sign = pairing(e, w);
        for (size_t k = 0; k < d.size(); ++k) out[k] += scale * sign * Rat(moved.c[k]);
    }
    return out;
}

} // namespace cuspidal
