// Small Galois fields GF(q), q = p^m a prime power, via explicit tables.
// Elements are encoded as integers 0..q-1 whose base-p digits are the
// coefficients of the residue polynomial over GF(p).
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cuspidal/integers.hpp"

namespace cuspidal {

class GaloisField {
public:
    explicit GaloisField(unsigned q)
    {
        auto fac = factorize(Int(q));
        if (q < 2 || fac.size() != 1)
            throw error("GF(q): q = " + std::to_string(q) + " is not a prime power");
        p_ = static_cast<unsigned>(fac.begin()->first);
        m_ = fac.begin()->second;
        q_ = q;
        build_tables();
    }

    unsigned q() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }

    unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
    unsigned neg(unsigned a) const { return neg_[a]; }
    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

    unsigned inv(unsigned a) const
    {
        if (a == 0) throw error("GF: inverse of zero");
        return inv_[a];
    }

    unsigned pow(unsigned a, Int e) const
    {
        Int ord = q_ - 1;
        if (a == 0) {
            if (e < 0) throw error("GF: inverse of zero");
            return e == 0 ? 1u : 0u;
        }
        Int r = e % ord;
        if (r < 0) r += ord;
        unsigned out = 1, base = a;
        auto k = static_cast<unsigned long>(r);
        while (k) {
            if (k & 1) out = mul(out, base);
            base = mul(base, base);
            k >>= 1;
        }
        return out;
    }

    // The field's -1 (equals 1 in characteristic 2).
    unsigned minus_one() const { return neg(1); }

    bool operator==(const GaloisField& o) const { return q_ == o.q_; }

private:
    unsigned p_ = 0, m_ = 0, q_ = 0;
    std::vector<unsigned> add_, mul_, neg_, inv_;

    // Digits of x base p, little-endian.
    std::vector<unsigned> digits(unsigned x) const
    {
        std::vector<unsigned> d(m_);
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    }

    unsigned undigits(const std::vector<unsigned>& d) const
    {
        unsigned x = 0;
        for (unsigned i = m_; i-- > 0;) x = x * p_ + (i < d.size() ? d[i] % p_ : 0);
        return x;
    }

    // Multiply polynomials over GF(p) and reduce modulo `mod` (monic, degree m).
    unsigned polymul_mod(unsigned a, unsigned b, const std::vector<unsigned>& mod) const
    {
        auto da = digits(a), db = digits(b);
        std::vector<unsigned> prod(2 * m_, 0);
        for (unsigned i = 0; i < m_; ++i)
            for (unsigned j = 0; j < m_; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (unsigned k = 2 * m_; k-- > m_;) {
            unsigned c = prod[k];
            if (!c) continue;
            prod[k] = 0;
            for (unsigned i = 0; i < m_; ++i)
                prod[k - m_ + i] = (prod[k - m_ + i] + c * (p_ - mod[i] % p_)) % p_;
        }
        prod.resize(m_);
        return undigits(prod);
    }

    void build_tables()
    {
        std::vector<unsigned> mod;
        if (m_ == 1) {
            mod = {0, 1};
        } else {
            mod = find_irreducible();
        }
        add_.assign(static_cast<size_t>(q_) * q_, 0);
        mul_.assign(static_cast<size_t>(q_) * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            auto da = digits(a);
            std::vector<unsigned> nd(m_);
            for (unsigned i = 0; i < m_; ++i) nd[i] = (p_ - da[i]) % p_;
            neg_[a] = undigits(nd);
            for (unsigned b = 0; b < q_; ++b) {
                auto db = digits(b);
                std::vector<unsigned> sd(m_);
                for (unsigned i = 0; i < m_; ++i) sd[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = undigits(sd);
                mul_[a * q_ + b] = polymul_mod(a, b, mod);
            }
        }
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }

    // Monic irreducible of degree m over GF(p), found by exhaustive search.
    std::vector<unsigned> find_irreducible() const
    {
        unsigned count = 1;
        for (unsigned i = 0; i < m_; ++i) count *= p_;
        for (unsigned lo = 0; lo < count; ++lo) {
            std::vector<unsigned> cand(m_ + 1, 0);
            unsigned x = lo;
            for (unsigned i = 0; i < m_; ++i) {
                cand[i] = x % p_;
                x /= p_;
            }
            cand[m_] = 1;
            if (poly_irreducible(cand)) return cand;
        }
        throw error("GF: no irreducible polynomial found"); // unreachable
    }

    bool poly_irreducible(const std::vector<unsigned>& f) const
    {
        unsigned deg = static_cast<unsigned>(f.size()) - 1;
        // Trial division by every monic polynomial of degree 1..deg/2.
        for (unsigned d = 1; 2 * d <= deg; ++d) {
            unsigned count = 1;
            for (unsigned i = 0; i < d; ++i) count *= p_;
            for (unsigned lo = 0; lo < count; ++lo) {
                std::vector<unsigned> g(d + 1, 0);
                unsigned x = lo;
                for (unsigned i = 0; i < d; ++i) {
                    g[i] = x % p_;
                    x /= p_;
                }
                g[d] = 1;
                if (poly_divides(g, f)) return false;
            }
        }
        return true;
    }

    bool poly_divides(const std::vector<unsigned>& g, std::vector<unsigned> r) const
    {
        unsigned dg = static_cast<unsigned>(g.size()) - 1;
        while (r.size() >= g.size()) {
            unsigned lead = r.back();
            if (lead) {
                unsigned shift = static_cast<unsigned>(r.size() - g.size());
                for (unsigned i = 0; i <= dg; ++i)
                    r[shift + i] = (r[shift + i] + lead * (p_ - g[i] % p_)) % p_;
            }
            r.pop_back();
        }
        for (unsigned c : r)
            if (c) return false;
        return true;
    }
};

using GaloisFieldPtr = std::shared_ptr<const GaloisField>;

inline GaloisFieldPtr make_field(unsigned q) { return std::make_shared<const GaloisField>(q); }

} // namespace cuspidal
