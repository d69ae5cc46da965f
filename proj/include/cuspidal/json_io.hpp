// JSON forms of the wire-facing types.  Divisors carry their coefficients
// keyed by W bitstrings; groups carry raw factors, inverted primes and the
// reduced factors.
#pragma once

#include <json.hpp>

#include "cuspidal/abelian.hpp"
#include "cuspidal/cusp_lattice.hpp"
#include "cuspidal/torsion.hpp"

namespace cuspidal {

using json = nlohmann::json;

inline std::string w_bitstring(WElem w, size_t s)
{
    std::string out(s, '0');
    for (size_t i = 0; i < s; ++i)
        if ((w >> i) & 1) out[i] = '1';
    return out;
}

inline WElem parse_w_bitstring(const std::string& text)
{
    WElem w = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1')
            w |= WElem(1) << i;
        else if (text[i] != '0')
            throw error("bad W bitstring '" + text + "'");
    }
    return w;
}

inline json to_json(const CuspDivisor& d)
{
    json coeffs = json::object();
    for (WElem w = 0; w < d.size(); ++w)
        if (d.c[w] != 0) coeffs[w_bitstring(w, d.s)] = d.c[w].str();
    return json{{"s", d.s}, {"coeffs", coeffs}};
}

inline CuspDivisor cusp_divisor_from_json(const json& j)
{
    CuspDivisor d(j.at("s").get<size_t>());
    for (auto& [key, val] : j.at("coeffs").items()) {
        if (key.size() != d.s) throw error("bitstring length mismatch in divisor JSON");
        d.c[parse_w_bitstring(key)] = Int(val.get<std::string>());
    }
    return d;
}

inline json to_json(const LocalizedAbelianGroup& g)
{
    auto ints = [](const std::vector<Int>& v) {
        json a = json::array();
        for (auto& x : v) a.push_back(x.str());
        return a;
    };
    json inverted = json::array();
    for (auto& p : g.inverted()) inverted.push_back(p.str());
    return json{{"group", ints(g.factors())},
                {"inverted", inverted},
                {"reduced", ints(g.reduced_factors())}};
}

inline LocalizedAbelianGroup group_from_json(const json& j)
{
    std::vector<Int> factors;
    for (auto& x : j.at("group")) factors.emplace_back(x.get<std::string>());
    std::set<Int> inverted;
    for (auto& x : j.at("inverted")) inverted.emplace(x.get<std::string>());
    return LocalizedAbelianGroup(factors, inverted);
}

inline json to_json(const EPartTable& table)
{
    json rows = json::array();
    for (auto& row : table.entries)
        rows.push_back(json{{"e", row.e.str()},
                            {"M", row.m_order.str()},
                            {"Mtilde", row.mtilde_order.str()}});
    json inverted = json::array();
    for (auto& p : table.inverted) inverted.push_back(p.str());
    return json{{"inverted", inverted}, {"entries", rows}};
}

} // namespace cuspidal
