// The two arithmetic settings behind every computation:
//   NF: A = Z, primes are rational primes;
//   FF: A = F_q[t], primes are monic irreducible polynomials.
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cuspidal/ffpoly.hpp"
#include "cuspidal/integers.hpp"

namespace cuspidal {

enum class Case { NF, FF };

struct Setting {
    Case kind = Case::NF;
    GaloisFieldPtr field; // FF only

    static Setting nf() { return {Case::NF, nullptr}; }
    static Setting ff(unsigned q) { return {Case::FF, make_field(q)}; }

    bool is_nf() const { return kind == Case::NF; }
    bool is_ff() const { return kind == Case::FF; }
    unsigned q() const
    {
        if (!is_ff()) throw error("Setting: q requested in NF case");
        return field->q();
    }
};

// A prime element of A, validated on construction.
class PrimeElt {
public:
    PrimeElt(const Setting& setting, Int p) : nf_(std::move(p))
    {
        if (!setting.is_nf()) throw error("PrimeElt: integer prime in FF setting");
        if (!is_prime(nf_)) throw error("PrimeElt: " + nf_.str() + " is not prime");
    }

    PrimeElt(const Setting& setting, FFPoly p) : ff_(std::move(p))
    {
        if (!setting.is_ff()) throw error("PrimeElt: polynomial prime in NF setting");
        if (!ff_->is_monic()) throw error("PrimeElt: polynomial must be monic");
        if (!is_irreducible(*ff_)) throw error("PrimeElt: " + ff_->str() + " is reducible");
    }

    bool is_nf() const { return !ff_.has_value(); }
    const Int& integer() const { return nf_; }
    const FFPoly& poly() const { return *ff_; }
    int deg() const { return ff_->degree(); }

    bool operator==(const PrimeElt& o) const
    {
        if (is_nf() != o.is_nf()) return false;
        return is_nf() ? nf_ == o.nf_ : *ff_ == *o.ff_;
    }
    bool operator!=(const PrimeElt& o) const { return !(*this == o); }

    std::string str() const { return is_nf() ? nf_.str() : ff_->str(); }

private:
    Int nf_ = 0;
    std::optional<FFPoly> ff_;
};

// |p|: p itself in NF, q^deg(p) in FF.
inline Int norm(const Setting& setting, const PrimeElt& p)
{
    if (setting.is_nf()) return p.integer();
    return pow(Int(setting.q()), static_cast<unsigned long>(p.deg()));
}

// The constants (k, b, a) of the ambient setting.
struct Constants {
    Int k, b, a;
};

inline Constants constants(const Setting& setting)
{
    if (setting.is_nf()) return {12, 3, 6};
    Int q = setting.q();
    return {q * q - 1, q + 1, q * (q * q - 1)};
}

// Squarefree level N = p_1 ... p_s given by its (distinct) prime factors.
class Modulus {
public:
    Modulus(Setting setting, std::vector<PrimeElt> primes)
        : setting_(std::move(setting)), primes_(std::move(primes))
    {
        if (primes_.empty()) throw error("Modulus: need at least one prime");
        for (size_t i = 0; i < primes_.size(); ++i)
            for (size_t j = i + 1; j < primes_.size(); ++j)
                if (primes_[i] == primes_[j])
                    throw error("Modulus: repeated prime " + primes_[i].str() + " (level not squarefree)");
    }

    const Setting& setting() const { return setting_; }
    const std::vector<PrimeElt>& primes() const { return primes_; }
    size_t s() const { return primes_.size(); }
    const PrimeElt& prime(size_t i) const { return primes_.at(i); } // 0-based

    Int norm_of(size_t i) const { return norm(setting_, primes_[i]); }

    Int level_nf() const
    {
        Int n = 1;
        for (auto& p : primes_) n *= p.integer();
        return n;
    }

    FFPoly level_ff() const
    {
        FFPoly n = FFPoly::one(setting_.field);
        for (auto& p : primes_) n = n * p.poly();
        return n;
    }

    std::string level_str() const
    {
        if (setting_.is_nf()) return level_nf().str();
        std::string out;
        for (auto& p : primes_) out += "(" + p.str() + ")";
        return out;
    }

    bool contains(const PrimeElt& p) const
    {
        for (auto& pi : primes_)
            if (pi == p) return true;
        return false;
    }

private:
    Setting setting_;
    std::vector<PrimeElt> primes_;
};

inline bool hecke_eligible_prime(const Modulus& m, const PrimeElt& p)
{
    return !m.contains(p);
}

// Sign characters live as vectors of +-1 over the prime slots.
using SignVec = std::vector<int>;

// e_H = ((p_i / 3))_i in NF (needs (3, N) = 1), ((-1)^deg p_i)_i in FF.
inline SignVec e_H(const Modulus& m)
{
    SignVec out;
    out.reserve(m.s());
    if (m.setting().is_nf()) {
        for (auto& p : m.primes()) {
            Int r = p.integer() % 3;
            if (r == 0)
                throw undefined_value("e_H undefined: 3 divides the level");
            out.push_back(r == 1 ? +1 : -1);
        }
    } else {
        for (auto& p : m.primes()) out.push_back(p.deg() % 2 == 0 ? +1 : -1);
    }
    return out;
}

// Convenience constructors -------------------------------------------------

// NF modulus from a (possibly composite) positive integer; trial division.
inline Modulus nf_modulus(Int n)
{
    if (n < 2) throw error("level must be >= 2");
    Setting st = Setting::nf();
    std::vector<PrimeElt> primes;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) throw error("level " + n.str() + " is not squarefree");
        primes.emplace_back(st, p);
    }
    return Modulus(st, std::move(primes));
}

inline Modulus nf_modulus_from_primes(const std::vector<Int>& ps)
{
    Setting st = Setting::nf();
    std::vector<PrimeElt> primes;
    for (auto& p : ps) primes.emplace_back(st, p);
    return Modulus(st, std::move(primes));
}

inline Modulus ff_modulus(unsigned q, const std::vector<FFPoly>& factors)
{
    Setting st = Setting::ff(q);
    std::vector<PrimeElt> primes;
    for (auto& f : factors) {
        // re-parse against the shared field object
        FFPoly g(st.field, f.coeffs());
        primes.emplace_back(st, g);
    }
    return Modulus(st, std::move(primes));
}

// FF modulus from one polynomial (factored if composite).
inline Modulus ff_modulus_from_poly(unsigned q, const std::string& text)
{
    Setting st = Setting::ff(q);
    FFPoly n = parse_poly(st.field, text);
    auto factors = factorize_poly(n);
    std::vector<PrimeElt> primes;
    for (auto& f : factors) {
        for (auto& p : primes)
            if (p.poly() == f) throw error("level " + n.str() + " is not squarefree");
        primes.emplace_back(st, f);
    }
    return Modulus(st, std::move(primes));
}

} // namespace cuspidal
