// Dense polynomials over GF(q), used as the ring A = F_q[t] in the
// function-field setting.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "cuspidal/galois.hpp"
#include "cuspidal/integers.hpp"

namespace cuspidal {

class FFPoly {
public:
    FFPoly() = default;

    FFPoly(GaloisFieldPtr field, std::vector<unsigned> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs))
    {
        trim();
    }

    static FFPoly zero(GaloisFieldPtr field) { return FFPoly(std::move(field), {}); }
    static FFPoly one(GaloisFieldPtr field) { return FFPoly(std::move(field), {1}); }
    static FFPoly t(GaloisFieldPtr field) { return FFPoly(std::move(field), {0, 1}); }

    const GaloisFieldPtr& field() const { return field_; }
    const GaloisField& gf() const { return *field_; }
    const std::vector<unsigned>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    unsigned leading() const { return c_.empty() ? 0u : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    unsigned coeff(size_t i) const { return i < c_.size() ? c_[i] : 0u; }

    FFPoly operator+(const FFPoly& o) const
    {
        std::vector<unsigned> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = gf().add(coeff(i), o.coeff(i));
        return FFPoly(field_, std::move(r));
    }

    FFPoly operator-(const FFPoly& o) const
    {
        std::vector<unsigned> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = gf().sub(coeff(i), o.coeff(i));
        return FFPoly(field_, std::move(r));
    }

    FFPoly operator*(const FFPoly& o) const
    {
        if (is_zero() || o.is_zero()) return zero(field_);
        std::vector<unsigned> r(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = gf().add(r[i + j], gf().mul(c_[i], o.c_[j]));
        return FFPoly(field_, std::move(r));
    }

    // Euclidean division; divisor must be nonzero.
    std::pair<FFPoly, FFPoly> divmod(const FFPoly& d) const
    {
        if (d.is_zero()) throw error("FFPoly: division by zero");
        FFPoly r = *this;
        if (r.degree() < d.degree()) return {zero(field_), r};
        std::vector<unsigned> q(r.degree() - d.degree() + 1, 0);
        unsigned lead_inv = gf().inv(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            unsigned f = gf().mul(r.leading(), lead_inv);
            int shift = r.degree() - d.degree();
            q[shift] = f;
            std::vector<unsigned> rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rc[shift + i] = gf().sub(rc[shift + i], gf().mul(f, d.c_[i]));
            r = FFPoly(field_, std::move(rc));
        }
        return {FFPoly(field_, std::move(q)), r};
    }

    FFPoly operator%(const FFPoly& d) const { return divmod(d).second; }
    FFPoly operator/(const FFPoly& d) const { return divmod(d).first; }

    bool divisible_by(const FFPoly& d) const { return (*this % d).is_zero(); }

    bool operator==(const FFPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FFPoly& o) const { return c_ != o.c_; }

    // Degree-then-coefficient order; deterministic listing of moduli.
    bool operator<(const FFPoly& o) const
    {
        if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
        return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = c_.size(); i-- > 0;) {
            if (!c_[i]) continue;
            if (!out.empty()) out += "+";
            unsigned v = c_[i];
            if (i == 0) {
                out += std::to_string(v);
            } else {
                if (v != 1) out += std::to_string(v) + "*";
                out += (i == 1) ? "t" : "t^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    GaloisFieldPtr field_;
    std::vector<unsigned> c_; // c_[i] multiplies t^i; no trailing zeros

    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// All monic polynomials of exact degree d, in increasing coefficient order.
inline std::vector<FFPoly> monic_polys_of_degree(const GaloisFieldPtr& field, unsigned d)
{
    unsigned q = field->q();
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    std::vector<FFPoly> out;
    out.reserve(count);
    for (unsigned long long lo = 0; lo < count; ++lo) {
        std::vector<unsigned> c(d + 1, 0);
        unsigned long long x = lo;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = static_cast<unsigned>(x % q);
            x /= q;
        }
        c[d] = 1;
        out.emplace_back(field, std::move(c));
    }
    return out;
}

// Exhaustive trial division: no monic factor of degree in [1, deg/2].
inline bool is_irreducible(const FFPoly& f)
{
    if (!f.is_monic()) throw error("is_irreducible: polynomial must be monic");
    int deg = f.degree();
    if (deg < 1) throw error("is_irreducible: degree must be >= 1");
    for (int d = 1; 2 * d <= deg; ++d)
        for (const FFPoly& g : monic_polys_of_degree(f.field(), d))
            if (f.divisible_by(g)) return false;
    return true;
}

inline std::vector<FFPoly> monic_irreducibles_up_to(const GaloisFieldPtr& field, unsigned max_deg)
{
    std::vector<FFPoly> out;
    for (unsigned d = 1; d <= max_deg; ++d)
        for (auto& f : monic_polys_of_degree(field, d))
            if (is_irreducible(f)) out.push_back(f);
    return out;
}

// Factor into monic irreducibles by trial division (desk scale).
inline std::vector<FFPoly> factorize_poly(FFPoly f)
{
    if (f.is_zero()) throw error("factorize_poly: zero polynomial");
    std::vector<FFPoly> out;
    for (int d = 1; f.degree() >= 1; ++d) {
        if (2 * d > f.degree()) {
            // remainder is irreducible (after making monic)
            unsigned inv = f.gf().inv(f.leading());
            std::vector<unsigned> c = f.coeffs();
            for (auto& x : c) x = f.gf().mul(x, inv);
            out.emplace_back(f.field(), std::move(c));
            break;
        }
        for (const FFPoly& g : monic_polys_of_degree(f.field(), d))
            while (f.degree() >= g.degree() && f.divisible_by(g)) {
                out.push_back(g);
                f = f / g;
            }
    }
    return out;
}

// Parse strings like "t^3+t+1", "2*t^2+1", "t(t+1)(t^2+t+1)" is NOT
// accepted here; factors are given as separate strings or products are
// expanded by the caller.
inline FFPoly parse_poly(const GaloisFieldPtr& field, const std::string& text)
{
    std::vector<unsigned> coeffs;
    auto bump = [&](size_t deg, unsigned val) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = field->add(coeffs[deg], val % field->q());
    };
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size()) throw error("parse_poly: empty input");
    while (i < text.size()) {
        skip_ws();
        if (i < text.size() && text[i] == '+') {
            ++i;
            skip_ws();
        }
        unsigned val = 1;
        bool saw_coeff = false;
        if (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            val = 0;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                val = val * 10 + (text[i++] - '0');
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        size_t deg = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            deg = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i])))
                    throw error("parse_poly: malformed exponent in '" + text + "'");
                deg = 0;
                while (i < text.size() && isdigit(static_cast<unsigned char>(text[i])))
                    deg = deg * 10 + (text[i++] - '0');
            }
        } else if (!saw_coeff) {
            throw error("parse_poly: unexpected character in '" + text + "'");
        }
        bump(deg, val);
        skip_ws();
        if (i < text.size() && text[i] != '+')
            throw error("parse_poly: unexpected character in '" + text + "'");
    }
    return FFPoly(field, std::move(coeffs));
}

} // namespace cuspidal
