// Model of the Hecke action on cuspidal local data: the local-unit groups
// L and L^0, the map phi_w with its sign rule, Eisenstein checks and the
// odd-level obstruction element.
//
// F^x is modeled as the free abelian group on a declared prime set times
// {+-1} (NF) or F_q^x (FF); every formula in scope produces only such
// monomials, so equality is exact and decidable.
#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "cuspidal/cusp_lattice.hpp"

namespace cuspidal {

// Signed monomial +- prod p^{a_p} (NF) or c * prod p^{a_p}, c in F_q^x (FF).
class FXMonomial {
public:
    FXMonomial() = default; // NF identity

    static FXMonomial one_nf() { return FXMonomial(); }

    static FXMonomial one_ff(GaloisFieldPtr field)
    {
        FXMonomial m;
        m.field_ = std::move(field);
        return m;
    }

    static FXMonomial one_for(const Setting& st)
    {
        return st.is_ff() ? one_ff(st.field) : one_nf();
    }

    bool is_ff() const { return field_ != nullptr; }

    FXMonomial with_prime(const PrimeElt& p, const Int& exp) const
    {
        FXMonomial m = *this;
        m.exps_[p.str()] += exp;
        if (m.exps_[p.str()] == 0) m.exps_.erase(p.str());
        return m;
    }

    // multiply the F_q^x part by the given nonzero field element
    FXMonomial with_unit(unsigned u) const
    {
        if (!is_ff()) throw error("FXMonomial: with_unit is FF-only");
        if (u == 0 || u >= field_->q()) throw error("FXMonomial: unit out of range");
        FXMonomial m = *this;
        m.unit_ = field_->mul(m.unit_, u);
        return m;
    }

    FXMonomial negated() const
    {
        FXMonomial m = *this;
        if (is_ff())
            m.unit_ = field_->mul(m.unit_, field_->minus_one());
        else
            m.sign_ = -m.sign_;
        return m;
    }

    FXMonomial mul(const FXMonomial& o) const
    {
        FXMonomial m = *this;
        if (is_ff())
            m.unit_ = field_->mul(m.unit_, o.unit_);
        else
            m.sign_ *= o.sign_;
        for (auto& [p, e] : o.exps_) {
            m.exps_[p] += e;
            if (m.exps_[p] == 0) m.exps_.erase(p);
        }
        return m;
    }

    FXMonomial pow(const Int& n) const
    {
        FXMonomial m = *this;
        if (is_ff())
            m.unit_ = field_->pow(m.unit_, n);
        else
            m.sign_ = (n % 2 == 0) ? 1 : sign_;
        for (auto& [p, e] : m.exps_) e *= n;
        std::erase_if(m.exps_, [](const auto& kv) { return kv.second == 0; });
        return m;
    }

    FXMonomial inverse() const { return pow(-1); }

    bool is_one() const
    {
        return exps_.empty() && (is_ff() ? unit_ == 1 : sign_ == 1);
    }

    bool operator==(const FXMonomial& o) const
    {
        return sign_ == o.sign_ && unit_ == o.unit_ && exps_ == o.exps_;
    }
    bool operator!=(const FXMonomial& o) const { return !(*this == o); }

    std::string str() const
    {
        std::string out;
        if (is_ff()) {
            if (unit_ != 1 || exps_.empty()) out = std::to_string(unit_);
        } else {
            if (sign_ < 0) out = "-";
            if (exps_.empty()) out += "1";
        }
        for (auto& [p, e] : exps_) {
            if (!out.empty() && out != "-") out += "*";
            out += "(" + p + ")";
            if (e != 1) out += "^" + e.str();
        }
        return out.empty() ? "1" : out;
    }

private:
    int sign_ = 1;                 // NF unit
    unsigned unit_ = 1;            // FF unit in F_q^x
    GaloisFieldPtr field_;         // set in FF only
    std::map<std::string, Int> exps_;
};

// One local component: valuation at [w] plus the leading coefficient class.
struct LocalUnitClass {
    Int valuation = 0;
    FXMonomial leading;
};

// Element of L = sum over cusps of the local unit groups.
struct LElement {
    size_t s = 0;
    std::vector<LocalUnitClass> comp; // indexed by W mask

    explicit LElement(size_t s_, const Setting& st)
        : s(s_), comp(size_t(1) << s_, LocalUnitClass{0, FXMonomial::one_for(st)})
    {
    }

    Int total_valuation() const
    {
        Int t = 0;
        for (auto& u : comp) t += u.valuation;
        return t;
    }
    bool in_L0() const { return total_valuation() == 0; }
};

inline Int hecke_degree(const Modulus& mod, const PrimeElt& p)
{
    if (!hecke_eligible_prime(mod, p))
        throw error("Hecke prime " + p.str() + " divides the level");
    return norm(mod.setting(), p) + 1;
}

// Divisor-level Hecke action: g_*(f^*[w]) = (|p|+1)[w].
inline CuspDivisor hecke_on_cusp_divisor(const Modulus& mod, const PrimeElt& p, const CuspDivisor& d)
{
    return d * hecke_degree(mod, p);
}

// phi_w: valuation scales by |p|+1; the leading term picks up the sign
// (-1)^{(|p|+1) ord} and is raised to the power |p|+1.
inline LocalUnitClass phi_w(const Modulus& mod, const PrimeElt& p, const LocalUnitClass& u)
{
    Int np1 = hecke_degree(mod, p);
    LocalUnitClass out;
    out.valuation = np1 * u.valuation;
    out.leading = u.leading.pow(np1);
    if ((np1 * u.valuation) % 2 != 0) out.leading = out.leading.negated();
    return out;
}

// (tau_p - |p| - 1) x in the multiplicative model: phi_w(x_w) * x_w^{-(|p|+1)}.
// The result has all valuations zero, i.e. lands in D (x) F^x.
inline LElement apply_eisenstein(const Modulus& mod, const PrimeElt& p, const LElement& x)
{
    if (!x.in_L0()) throw error("apply_eisenstein: element not in L^0");
    Int np1 = hecke_degree(mod, p);
    LElement out = x;
    for (size_t w = 0; w < x.comp.size(); ++w) {
        LocalUnitClass t = phi_w(mod, p, x.comp[w]);
        out.comp[w].valuation = t.valuation - np1 * x.comp[w].valuation;
        out.comp[w].leading = t.leading.mul(x.comp[w].leading.pow(-np1));
    }
    return out;
}

// An all-valuation-zero element is zero in D3 (x) F^x exactly when all
// components agree (the diagonal is divided out).
inline bool is_zero_in_D3_tensor_units(const LElement& x)
{
    for (auto& u : x.comp) {
        if (u.valuation != 0)
            throw error("is_zero_in_D3_tensor_units: element has nonzero valuations");
        if (u.leading != x.comp[0].leading) return false;
    }
    return true;
}

inline bool is_identity(const LElement& x)
{
    for (auto& u : x.comp)
        if (u.valuation != 0 || !u.leading.is_one()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Remark-level obstruction: the lift of [1]-[1/p_1]-[p_1/N]+[1/N] is not
// killed by tau_2 - 3 for odd N with s > 2.

struct ObstructionResult {
    LElement projected;     // all valuations zero; entries +-1
    bool nonzero = false;

    explicit ObstructionResult(LElement e) : projected(std::move(e)) {}
};

inline ObstructionResult remark58_obstruction(const Modulus& mod)
{
    const Setting& st = mod.setting();
    if (!st.is_nf()) throw error("remark58_obstruction: NF only");
    if (mod.level_nf() % 2 == 0) throw error("remark58_obstruction: level must be odd");
    PrimeElt two(st, Int(2));

    size_t s = mod.s();
    WElem all_ones = (WElem(1) << s) - 1;
    LElement xi(s, st);
    // [p_1/N] = [1/(N/p_1)]
    xi.comp[0].valuation += 1;
    xi.comp[1].valuation -= 1;              // [1/p_1]
    xi.comp[all_ones ^ 1].valuation -= 1;   // [1/(N/p_1)]
    xi.comp[all_ones].valuation += 1;       // [1/N]

    ObstructionResult res(apply_eisenstein(mod, two, xi));
    res.nonzero = !is_zero_in_D3_tensor_units(res.projected);
    return res;
}

// ---------------------------------------------------------------------------
// Randomized L^0 sampling and the verification dashboard.

inline LElement random_L0_element(const Modulus& mod, std::mt19937_64& rng)
{
    const Setting& st = mod.setting();
    LElement x(mod.s(), st);
    std::uniform_int_distribution<int> val_dist(-3, 3);
    std::uniform_int_distribution<int> exp_dist(-2, 2);
    Int total = 0;
    for (size_t w = 0; w < x.comp.size(); ++w) {
        Int v = (w + 1 == x.comp.size()) ? -total : Int(val_dist(rng));
        total += v;
        x.comp[w].valuation = v;
        FXMonomial lead = FXMonomial::one_for(st);
        for (size_t i = 0; i < mod.s(); ++i)
            lead = lead.with_prime(mod.prime(i), exp_dist(rng));
        if (st.is_nf()) {
            if (rng() & 1) lead = lead.negated();
        } else {
            std::uniform_int_distribution<unsigned> unit_dist(1, st.q() - 1);
            lead = lead.with_unit(unit_dist(rng));
        }
        x.comp[w].leading = lead;
    }
    return x;
}

struct EisensteinChecks {
    std::string prime;
    bool divisor_action_ok = false;  // tau_p acts by |p|+1 on the cusp basis
    bool d3_eisenstein_ok = false;   // (tau_p - |p| - 1) kills D3
    bool exponent_two_ok = false;    // (tau_p - |p| - 1)^2 kills sampled L^0
    bool exponent_one_ok = false;    // single application already kills samples
                                     // (in D3 (x) F^x after the first hit)
};

struct EisensteinReport {
    std::vector<EisensteinChecks> per_prime;
    bool remark58_applicable = false;
    bool remark58_nonzero = false;
};

inline EisensteinChecks eisenstein_checks(const Modulus& mod, const PrimeElt& p, size_t samples,
                                          std::mt19937_64& rng)
{
    EisensteinChecks out;
    out.prime = p.str();
    Int np1 = hecke_degree(mod, p);

    out.divisor_action_ok = true;
    out.d3_eisenstein_ok = true;
    for (WElem w = 0; w < (WElem(1) << mod.s()); ++w) {
        CuspDivisor basis(mod.s());
        basis.c[w] = 1;
        CuspDivisor acted = hecke_on_cusp_divisor(mod, p, basis);
        if (!(acted == basis * np1)) out.divisor_action_ok = false;
        CuspDivisor diff = acted - basis * np1;
        for (auto& coeff : d3_coords(diff))
            if (coeff != 0) out.d3_eisenstein_ok = false;
    }

    out.exponent_two_ok = true;
    out.exponent_one_ok = true;
    for (size_t n = 0; n < samples; ++n) {
        LElement x = random_L0_element(mod, rng);
        LElement once = apply_eisenstein(mod, p, x);
        if (!is_zero_in_D3_tensor_units(once)) out.exponent_one_ok = false;
        LElement twice = apply_eisenstein(mod, p, once);
        if (!is_identity(twice)) out.exponent_two_ok = false;
    }
    return out;
}

inline EisensteinReport eisenstein_report(const Modulus& mod, const std::vector<PrimeElt>& primes,
                                          size_t samples = 100, unsigned long long seed = 20240601)
{
    std::mt19937_64 rng(seed);
    EisensteinReport rep;
    for (auto& p : primes) {
        if (!hecke_eligible_prime(mod, p)) continue;
        rep.per_prime.push_back(eisenstein_checks(mod, p, samples, rng));
    }
    if (mod.setting().is_nf() && mod.level_nf() % 2 != 0) {
        rep.remark58_applicable = true;
        rep.remark58_nonzero = remark58_obstruction(mod).nonzero;
    }
    return rep;
}

} // namespace cuspidal
