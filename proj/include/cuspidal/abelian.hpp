// Finite abelian groups in invariant-factor form, together with a set S of
// inverted primes (localization).  The unreduced factors are kept; the
// reduced form strips every S-part.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "cuspidal/integers.hpp"
#include "cuspidal/matrix.hpp"

namespace cuspidal {

class LocalizedAbelianGroup {
public:
    LocalizedAbelianGroup() = default;

    // Normalizes an arbitrary list of cyclic orders into a divisibility
    // chain via the SNF of the corresponding diagonal matrix.
    LocalizedAbelianGroup(const std::vector<Int>& cyclic_orders, std::set<Int> inverted = {})
        : inverted_(std::move(inverted))
    {
        std::vector<Int> orders;
        for (auto& n : cyclic_orders) {
            if (n == 0) throw error("LocalizedAbelianGroup: infinite cyclic factor");
            if (abs(n) > 1) orders.push_back(abs(n));
        }
        if (!orders.empty()) {
            IntMatrix d(orders.size(), orders.size());
            for (size_t i = 0; i < orders.size(); ++i) d(i, i) = orders[i];
            factors_ = smith_normal_form(d).factors;
            std::erase_if(factors_, [](const Int& f) { return f == 1; });
        }
    }

    static LocalizedAbelianGroup trivial(std::set<Int> inverted = {})
    {
        return LocalizedAbelianGroup({}, std::move(inverted));
    }

    const std::vector<Int>& factors() const { return factors_; }
    const std::set<Int>& inverted() const { return inverted_; }

    std::vector<Int> reduced_factors() const
    {
        std::vector<Int> out;
        for (auto& f : factors_) {
            Int g = strip_primes(f, inverted_);
            if (g > 1) out.push_back(g);
        }
        return out;
    }

    bool is_trivial() const { return reduced_factors().empty(); }

    Int order() const
    {
        Int n = 1;
        for (auto& f : reduced_factors()) n *= f;
        return n;
    }

    // Equality of the localized groups: compare reduced invariant factors.
    bool isomorphic(const LocalizedAbelianGroup& o) const
    {
        return reduced_factors() == o.reduced_factors();
    }

    std::string str() const
    {
        auto red = reduced_factors();
        if (red.empty()) return "0";
        std::string out;
        for (auto& f : red) {
            if (!out.empty()) out += " + ";
            out += "Z/" + f.str();
        }
        return out;
    }

private:
    std::vector<Int> factors_; // divisibility chain, entries >= 2
    std::set<Int> inverted_;
};

} // namespace cuspidal
