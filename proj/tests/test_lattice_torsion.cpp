#include <catch_amalgamated.hpp>

#include "cuspidal/cuspidal.hpp"

using namespace cuspidal;

TEST_CASE("characters and pairing")
{
    auto chars = all_characters(2);
    REQUIRE(chars.size() == 4);
    REQUIRE(chars[0].str() == "++");
    REQUIRE(chars[1].str() == "+-");
    REQUIRE(chars[2].str() == "-+");
    REQUIRE(chars[3].str() == "--");
    REQUIRE(chars[0].is_one());

    Character e = Character::parse("-+-");
    REQUIRE(e.weight() == 2);
    REQUIRE(e.unit_negation_index() == 0);
    REQUIRE(Character::unit_negation(3, 2).str() == "+-+");
    REQUIRE(Character::unit_negation(3, 2).unit_negation_index() == 2);
    REQUIRE_THROWS_AS(Character::parse("+x"), error);
    REQUIRE_THROWS_AS(Character::unit_negation(3, 4), error);

    // <e, w> is multiplicative in w
    for (auto& ch : all_characters(3))
        for (WElem w1 = 0; w1 < 8; ++w1)
            for (WElem w2 = 0; w2 < 8; ++w2)
                if ((w1 & w2) == 0)
                    REQUIRE(pairing(ch, w1 | w2) == pairing(ch, w1) * pairing(ch, w2));

    REQUIRE(pairing(Character::parse("-+"), 0b01) == -1);
    REQUIRE(pairing(Character::parse("-+"), 0b10) == 1);
    REQUIRE(pairing(Character::parse("--"), 0b11) == 1);
    REQUIRE_THROWS_AS(pairing(Character::parse("-"), 2), error);
}

TEST_CASE("pairing matrix determinants")
{
    REQUIRE(pairing_matrix_det(1) == 2);
    REQUIRE(pairing_matrix_det(2) == 16);
    REQUIRE(pairing_matrix_det(3) == 4096);
    REQUIRE(pairing_matrix_det(4) == pow(Int(2), 32));
    for (size_t s = 1; s <= 4; ++s)
        REQUIRE(pairing_matrix_det(s) == pow(Int(2), static_cast<unsigned long>((1u << (s - 1)) * s)));
}

TEST_CASE("atkin-lehner translation")
{
    size_t s = 3;
    CuspDivisor d(s);
    for (WElem w = 0; w < 8; ++w) d.c[w] = Int(w) * 3 - 5;

    // involution and composition law
    for (WElem w = 0; w < 8; ++w) {
        REQUIRE(atkin_lehner(w, atkin_lehner(w, d)) == d);
        for (WElem w2 = 0; w2 < 8; ++w2)
            REQUIRE(atkin_lehner(w, atkin_lehner(w2, d)) == atkin_lehner(w ^ w2, d));
    }

    // D^e is a <e,w>-eigenvector
    for (auto& e : all_characters(s))
        for (WElem w = 0; w < 8; ++w)
            REQUIRE(atkin_lehner(w, D_e(e)) == D_e(e) * Int(pairing(e, w)));

    REQUIRE(D_e(Character::one(s)).degree() == 8);
    REQUIRE(D_e(Character::parse("-+-")).degree() == 0);
}

TEST_CASE("D2 basis and lattice indices")
{
    for (size_t s = 1; s <= 3; ++s) {
        auto basis = d2_basis(s);
        REQUIRE(basis.size() == (size_t(1) << s) - 1);
        for (auto& b : basis) {
            CuspDivisor d = d2_basis_divisor(s, b);
            REQUIRE(d.degree() == 0);
            auto coords = expand_in_d2_basis(d);
            size_t nonzero = 0;
            for (auto& x : coords) nonzero += (x != 0);
            REQUIRE(nonzero == 1); // basis expansion is the identity
        }
        // every D^e (e != 1) lies in D2 and round-trips through coordinates
        for (auto& e : all_characters(s)) {
            if (e.is_one()) continue;
            auto coords = expand_in_d2_basis(D_e(e));
            IntMatrix B = d2_basis_matrix(s);
            CuspDivisor back(s);
            for (size_t j = 0; j < coords.size(); ++j)
                for (size_t w = 0; w < back.size(); ++w) back.c[w] += B(w, j) * coords[j];
            REQUIRE(back == D_e(e));
        }
    }

    REQUIRE(lattice_index_D2_D1(1) == 1);
    REQUIRE(lattice_index_D2_D1(2) == 4);
    REQUIRE(lattice_index_D2_D1(3) == 512);

    for (size_t s = 1; s <= 3; ++s)
        REQUIRE(coker_D2_to_D3(s).order() == Int(1) << s);

    CuspDivisor deg1(2);
    deg1.c[0] = 1;
    REQUIRE_THROWS_AS(expand_in_d2_basis(deg1), error);
}

TEST_CASE("eigencomponent projectors")
{
    size_t s = 2;
    CuspDivisor d(s);
    d.c[0] = 7;
    d.c[1] = -2;
    d.c[2] = 1;
    d.c[3] = 4;

    REQUIRE_THROWS_AS(e_part(d, Character::one(s), {Int(3)}), error); // 2 not inverted

    std::set<Int> inv{Int(2), Int(3)};
    // components sum back to d
    std::vector<Rat> total(d.size(), Rat(0));
    for (auto& e : all_characters(s)) {
        auto comp = e_part(d, e, inv);
        for (size_t i = 0; i < comp.size(); ++i) total[i] += comp[i];
    }
    for (size_t i = 0; i < total.size(); ++i) REQUIRE(total[i] == Rat(d.c[i]));

    // D^e projects to itself under its own character, to 0 under others
    for (auto& e : all_characters(s))
        for (auto& f : all_characters(s)) {
            auto comp = e_part(D_e(e), f, inv);
            for (size_t i = 0; i < comp.size(); ++i)
                REQUIRE(comp[i] == (e == f ? Rat(D_e(e).c[i]) : Rat(0)));
        }
}

TEST_CASE("d(e) against the subset expansion")
{
    // prod (|p_i| + e_i) = sum_w |m(w)| <e, complement of w>
    for (Int n : {Int(11), Int(15), Int(105), Int(77)}) {
        Modulus mod = nf_modulus(n);
        WElem full = (WElem(1) << mod.s()) - 1;
        for (auto& e : all_characters(mod.s())) {
            Int expanded = 0;
            for (WElem w = 0; w <= full; ++w)
                expanded += norm_of_m(mod, w) * pairing(e, full ^ w);
            REQUIRE(expanded == d_of_char(mod, e));
        }
    }
    Modulus ff = ff_modulus_from_poly(2, "t^3+t^2+t"); // t (t^2+t+1)
    for (auto& e : all_characters(ff.s())) {
        WElem full = (WElem(1) << ff.s()) - 1;
        Int expanded = 0;
        for (WElem w = 0; w <= full; ++w) expanded += norm_of_m(ff, w) * pairing(e, full ^ w);
        REQUIRE(expanded == d_of_char(ff, e));
    }
}

TEST_CASE("torsion structure values")
{
    REQUIRE(jacobian_torsion(nf_modulus(11)).str() == "Z/5");
    REQUIRE(gen_jacobian_torsion(nf_modulus(11)).is_trivial());
    REQUIRE(prime_level_torsion_order(nf_modulus(11)) == 5);
    REQUIRE(prime_level_torsion_order(nf_modulus(23)) == 11);
    REQUIRE(prime_level_torsion_order(nf_modulus(37)) == 3);
    REQUIRE(prime_level_torsion_order(nf_modulus(2)) == 1);
    REQUIRE_THROWS_AS(prime_level_torsion_order(nf_modulus(15)), error);

    REQUIRE(jacobian_torsion(nf_modulus(14)).is_trivial());
    REQUIRE(jacobian_torsion(nf_modulus(15)).is_trivial());

    auto j77 = jacobian_torsion(nf_modulus(77));
    REQUIRE(j77.reduced_factors() == std::vector<Int>{5, 5});
    auto g77 = gen_jacobian_torsion(nf_modulus(77));
    REQUIRE(g77.reduced_factors() == std::vector<Int>{5});

    REQUIRE(gen_jacobian_torsion(nf_modulus(143)).str() == "Z/5");

    // FF: q = 2, N = t^3 + t + 1, |N| = 8: order 7
    Modulus ff = ff_modulus_from_poly(2, "t^3+t+1");
    REQUIRE(prime_level_torsion_order(ff) == 7);
    REQUIRE(jacobian_torsion(ff).str() == "Z/7");

    // epart table is consistent with the direct sum
    for (Int n : {Int(11), Int(77), Int(105)}) {
        Modulus mod = nf_modulus(n);
        auto table = epart_table(mod);
        Int prod_m = 1, prod_mt = 1;
        for (auto& row : table.entries) {
            prod_m *= row.m_order;
            prod_mt *= row.mtilde_order;
        }
        REQUIRE(prod_m == jacobian_torsion(mod).order());
        REQUIRE(prod_mt == gen_jacobian_torsion(mod).order());
    }
}

TEST_CASE("ell-part case split")
{
    Modulus m77 = nf_modulus(77);
    REQUIRE(cuspidal_ell_part(m77, 5, Character::parse("--")) == 5);
    REQUIRE(cuspidal_ell_part(m77, 5, Character::parse("-+")) == 1);
    REQUIRE(cuspidal_ell_part(m77, 5, Character::parse("+-")) == 5); // the e_H branch
    for (Int ell : {Int(7), Int(11), Int(13)})
        for (auto& e : all_characters(2))
            if (!e.is_one()) REQUIRE(cuspidal_ell_part(m77, ell, e) == 1);

    Modulus m91 = nf_modulus(91);
    REQUIRE(cuspidal_ell_part(m91, 7, Character::parse("-+")) == 7);
    REQUIRE(cuspidal_ell_part(m91, 7, Character::parse("--")) == 1);
    REQUIRE(cuspidal_ell_part(m91, 5, Character::parse("--")) == 1);

    REQUIRE_THROWS_AS(cuspidal_ell_part(m77, 2, Character::parse("--")), excluded_case);
    REQUIRE_THROWS_AS(cuspidal_ell_part(m77, 4, Character::parse("--")), excluded_case);
    REQUIRE_THROWS_AS(cuspidal_ell_part(nf_modulus(15), 3, Character::parse("--")), excluded_case);
    // 3 | N but ell >= 5: both branches agree, value still defined
    REQUIRE(cuspidal_ell_part(nf_modulus(15), 5, Character::parse("+-")) == 1);

    Modulus ff = ff_modulus_from_poly(3, "t^2+1");
    REQUIRE_THROWS_AS(cuspidal_ell_part(ff, 3, Character::parse("-")), excluded_case);

    // Corollary table for the b-part
    REQUIRE(gen_jacobian_ell_part(m77, 3).is_trivial());
    REQUIRE(gen_jacobian_ell_part(m91, 3).str() == "Z/3");
    REQUIRE_THROWS_AS(gen_jacobian_ell_part(m77, 5), excluded_case);
    REQUIRE_THROWS_AS(gen_jacobian_ell_part(nf_modulus(15), 3), excluded_case);
}

TEST_CASE("json round trips")
{
    CuspDivisor d(2);
    d.c[0] = 3;
    d.c[2] = -7;
    REQUIRE(cusp_divisor_from_json(to_json(d)) == d);
    REQUIRE(w_bitstring(0b101, 3) == "101");
    REQUIRE(parse_w_bitstring("101") == 0b101);
    REQUIRE_THROWS_AS(parse_w_bitstring("12"), error);

    LocalizedAbelianGroup g({Int(60), Int(72)}, {Int(2), Int(3)});
    auto g2 = group_from_json(to_json(g));
    REQUIRE(g2.factors() == g.factors());
    REQUIRE(g2.inverted() == g.inverted());
    REQUIRE(g2.isomorphic(g));

    json t = to_json(epart_table(nf_modulus(15)));
    REQUIRE(t.at("entries").size() == 4);
    REQUIRE(t.at("entries")[0].at("e") == "++");
}
