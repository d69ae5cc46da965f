#include <catch_amalgamated.hpp>

#include "cuspidal/cuspidal.hpp"

using namespace cuspidal;

TEST_CASE("integer helpers")
{
    auto fac = factorize(105);
    REQUIRE(fac.size() == 3);
    REQUIRE(fac[Int(3)] == 1);
    REQUIRE(fac[Int(5)] == 1);
    REQUIRE(fac[Int(7)] == 1);
    REQUIRE(factorize(12)[Int(2)] == 2);
    REQUIRE_THROWS_AS(factorize(0), error);

    REQUIRE(is_prime(2));
    REQUIRE(is_prime(97));
    REQUIRE_FALSE(is_prime(1));
    REQUIRE_FALSE(is_prime(91));

    REQUIRE(ell_part(720, 2) == 16);
    REQUIRE(ell_part(720, 3) == 9);
    REQUIRE(ell_part(720, 7) == 1);
    REQUIRE_THROWS_AS(ell_part(0, 3), error);

    REQUIRE(strip_primes(720, {Int(2), Int(3)}) == 5);
    REQUIRE(strip_primes(7, {Int(2)}) == 7);

    REQUIRE(mod_one(Rat(7, 3)) == Rat(1, 3));
    REQUIRE(mod_one(Rat(-1, 4)) == Rat(3, 4));
    REQUIRE(mod_one(Rat(2)) == 0);
    REQUIRE(denominator_of(Rat(4, 6)) == 3);
}

TEST_CASE("galois field tables")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        auto F = make_field(q);
        for (unsigned a = 0; a < q; ++a) {
            REQUIRE(F->add(a, 0) == a);
            REQUIRE(F->mul(a, 1) == a);
            REQUIRE(F->add(a, F->neg(a)) == 0);
            if (a != 0) REQUIRE(F->mul(a, F->inv(a)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                REQUIRE(F->add(a, b) == F->add(b, a));
                REQUIRE(F->mul(a, b) == F->mul(b, a));
                for (unsigned c = 0; c < q; ++c) {
                    REQUIRE(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                    REQUIRE(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
                }
            }
        }
        // multiplicative group has order q - 1
        for (unsigned a = 1; a < q; ++a) REQUIRE(F->pow(a, Int(q - 1)) == 1);
    }
    REQUIRE(make_field(2)->minus_one() == 1);
    REQUIRE(make_field(4)->minus_one() == 1);
    REQUIRE(make_field(3)->minus_one() == 2);
    REQUIRE_THROWS_AS(make_field(6), error);
    REQUIRE_THROWS_AS(make_field(1), error);
}

TEST_CASE("polynomials over GF(q)")
{
    auto F2 = make_field(2);
    auto F3 = make_field(3);

    FFPoly f = parse_poly(F2, "t^3+t+1");
    REQUIRE(f.degree() == 3);
    REQUIRE(f.str() == "t^3+t+1");
    REQUIRE(parse_poly(F3, "2*t^2+1").str() == "2*t^2+1");

    FFPoly g = parse_poly(F2, "t+1");
    auto [quo, rem] = f.divmod(g);
    REQUIRE(quo * g + rem == f);
    REQUIRE(rem.degree() < g.degree());

    REQUIRE(is_irreducible(parse_poly(F2, "t^2+t+1")));
    REQUIRE_FALSE(is_irreducible(parse_poly(F2, "t^2+1"))); // (t+1)^2
    REQUIRE(is_irreducible(parse_poly(F3, "t^2+1")));

    // counts of monic irreducibles: 1, 2, 3 in degrees 2, 3, 4 over GF(2)
    auto count = [](const GaloisFieldPtr& F, unsigned d) {
        size_t n = 0;
        for (auto& p : monic_polys_of_degree(F, d))
            if (is_irreducible(p)) ++n;
        return n;
    };
    REQUIRE(count(F2, 2) == 1);
    REQUIRE(count(F2, 3) == 2);
    REQUIRE(count(F2, 4) == 3);
    REQUIRE(count(F3, 2) == 3);

    FFPoly n = parse_poly(F2, "t^4+t");
    auto factors = factorize_poly(n);
    FFPoly prod = FFPoly::one(F2);
    for (auto& p : factors) {
        REQUIRE(is_irreducible(p));
        prod = prod * p;
    }
    REQUIRE(prod == n);
    REQUIRE(factors.size() == 3); // t (t+1)(t^2+t+1)
}

TEST_CASE("settings, constants and moduli")
{
    Constants nf = constants(Setting::nf());
    REQUIRE(nf.k == 12);
    REQUIRE(nf.b == 3);
    REQUIRE(nf.a == 6);

    Constants f2 = constants(Setting::ff(2));
    REQUIRE(f2.k == 3);
    REQUIRE(f2.b == 3);
    REQUIRE(f2.a == 6);
    Constants f3 = constants(Setting::ff(3));
    REQUIRE(f3.k == 8);
    REQUIRE(f3.b == 4);
    REQUIRE(f3.a == 24);
    Constants f4 = constants(Setting::ff(4));
    REQUIRE(f4.k == 15);
    REQUIRE(f4.b == 5);
    REQUIRE(f4.a == 60);

    Modulus m11 = nf_modulus(11);
    REQUIRE(m11.s() == 1);
    REQUIRE(m11.norm_of(0) == 11);
    REQUIRE_THROWS_AS(nf_modulus(12), error);
    REQUIRE_THROWS_AS(nf_modulus(1), error);

    Modulus m15 = nf_modulus(15);
    REQUIRE(m15.level_nf() == 15);
    REQUIRE_THROWS_AS(e_H(m15), undefined_value);

    Modulus m77 = nf_modulus(77);
    REQUIRE(Character(e_H(m77)).str() == "+-");
    REQUIRE(Character(e_H(nf_modulus(91))).str() == "++");

    Modulus ff = ff_modulus_from_poly(2, "t^3+t+1");
    REQUIRE(ff.s() == 1);
    REQUIRE(ff.norm_of(0) == 8);
    REQUIRE(Character(e_H(ff)).str() == "-");
    REQUIRE(Character(e_H(ff_modulus_from_poly(2, "t^2+t+1"))).str() == "+");
    REQUIRE_THROWS_AS(ff_modulus_from_poly(2, "t^2"), error);

    Modulus ff2 = ff_modulus_from_poly(2, "t^2+t");
    REQUIRE(ff2.s() == 2);
    REQUIRE(ff2.level_ff() == parse_poly(Setting::ff(2).field, "t^2+t"));

    Setting st = Setting::nf();
    REQUIRE_THROWS_AS(PrimeElt(st, Int(9)), error);
    REQUIRE(hecke_eligible_prime(m11, PrimeElt(st, Int(2))));
    REQUIRE_FALSE(hecke_eligible_prime(m11, PrimeElt(st, Int(11))));
}

TEST_CASE("determinants and smith normal form")
{
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    REQUIRE(determinant(m) == 3);

    IntMatrix sing(2, 2);
    sing(0, 0) = 1;
    sing(0, 1) = 2;
    sing(1, 0) = 2;
    sing(1, 1) = 4;
    REQUIRE(determinant(sing) == 0);

    // SNF of a full matrix; transforms verified internally
    IntMatrix a(3, 3);
    Int vals[3][3] = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) a(i, j) = vals[i][j];
    auto snf = smith_normal_form(a);
    REQUIRE(snf.factors == std::vector<Int>{2, 2, 156});
    REQUIRE(abs(determinant(a)) == 2 * 2 * 156);

    IntMatrix diag(2, 2);
    diag(0, 0) = 4;
    diag(1, 1) = 6;
    REQUIRE(smith_normal_form(diag).factors == std::vector<Int>{2, 12});

    REQUIRE(quotient_invariants(diag) == std::vector<Int>{2, 12});

    // rank-deficient sublattice is rejected
    IntMatrix low(2, 1);
    low(0, 0) = 3;
    REQUIRE_THROWS_AS(quotient_invariants(low), error);
}

TEST_CASE("linear solving and lattice quotients")
{
    IntMatrix A(2, 2);
    A(0, 0) = 1;
    A(0, 1) = 2;
    A(1, 0) = 3;
    A(1, 1) = 5;
    auto x = solve_integral(A, {Int(5), Int(13)});
    REQUIRE(x.has_value());
    REQUIRE((*x)[0] == 1);
    REQUIRE((*x)[1] == 2);

    auto y = solve_rational(A, {Int(1), Int(0)});
    REQUIRE(y.has_value());
    REQUIRE((*y)[0] == Rat(-5));
    REQUIRE((*y)[1] == Rat(3));

    IntMatrix B(2, 2);
    B(0, 0) = 1;
    B(0, 1) = 2;
    B(1, 0) = 2;
    B(1, 1) = 4;
    REQUIRE_FALSE(solve_integral(B, {Int(1), Int(1)}).has_value());

    // Z^2 > 2Z^2 > 4Z x 2Z: quotient is Z/2
    IntMatrix G2(2, 2), G1(2, 2);
    G2(0, 0) = 2;
    G2(1, 1) = 2;
    G1(0, 0) = 4;
    G1(1, 1) = 2;
    REQUIRE(lattice_quotient_invariants(G2, G1) == std::vector<Int>{2});

    IntMatrix G0(2, 2);
    G0(0, 0) = 1;
    G0(1, 1) = 1;
    REQUIRE_THROWS_AS(lattice_quotient_invariants(G1, G0), error); // L1 not inside L2
}

TEST_CASE("localized abelian groups")
{
    LocalizedAbelianGroup g({Int(2), Int(4), Int(3)});
    REQUIRE(g.factors() == std::vector<Int>{2, 12});
    REQUIRE(g.order() == 24);
    REQUIRE(g.str() == "Z/2 + Z/12");

    LocalizedAbelianGroup loc({Int(2), Int(4), Int(3)}, {Int(2), Int(3)});
    REQUIRE(loc.is_trivial());
    REQUIRE(loc.str() == "0");

    LocalizedAbelianGroup h({Int(60), Int(72), Int(80)}, {Int(2), Int(3)});
    REQUIRE(h.reduced_factors() == std::vector<Int>{5, 5});
    REQUIRE(h.isomorphic(LocalizedAbelianGroup({Int(5), Int(5)})));
    REQUIRE_FALSE(h.isomorphic(LocalizedAbelianGroup({Int(25)})));

    REQUIRE(LocalizedAbelianGroup::trivial().is_trivial());
    REQUIRE_THROWS_AS(LocalizedAbelianGroup({Int(0)}), error);
}

TEST_CASE("q-series arithmetic")
{
    QSeries d = delta_qexp(12);
    REQUIRE(d.valuation() == 1);
    REQUIRE(d.coeff_at(1) == 1);
    REQUIRE(d.coeff_at(2) == -24);
    REQUIRE(d.coeff_at(3) == 252);
    REQUIRE(d.coeff_at(4) == -1472);
    REQUIRE(d.coeff_at(5) == 4830);

    // pentagonal number theorem through q^12
    QSeries e = euler_product(12);
    std::vector<Int> expect{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    REQUIRE(e.coeffs() == expect);

    QSeries inv = e.inverse();
    QSeries one = e.mul(inv);
    REQUIRE(one.valuation() == 0);
    for (size_t j = 0; j < one.truncation(); ++j)
        REQUIRE(one.coeffs()[j] == (j == 0 ? 1 : 0));

    REQUIRE(e.pow(0).coeff_at(0) == 1);
    REQUIRE(e.pow(2) == e.mul(e));
    REQUIRE(e.pow(-1) == inv);
    REQUIRE(e.pow(3).mul(e.pow(-3)).coeff_at(0) == 1);

    // associativity on truncations
    QSeries a(0, {Int(1), Int(2), Int(3), Int(4), Int(5)});
    QSeries b(1, {Int(1), Int(-1), Int(0), Int(7), Int(2)});
    QSeries c(-2, {Int(-1), Int(5), Int(1), Int(0), Int(3)});
    REQUIRE(a.mul(b).mul(c) == a.mul(b.mul(c)));
    REQUIRE(a.mul(b) == b.mul(a));

    QSeries dil = a.dilate(3);
    REQUIRE(dil.valuation() == 0);
    REQUIRE(dil.coeff_at(3) == 2);
    REQUIRE(dil.coeff_at(4) == 0);
    // dilation is multiplicative (compare within the common window)
    QSeries lhs = a.mul(b).dilate(2);
    QSeries rhs = a.dilate(2).mul(b.dilate(2));
    for (long long j = rhs.valuation(); j < rhs.valuation() + 8; ++j)
        REQUIRE(lhs.coeff_at(j) == rhs.coeff_at(j));

    REQUIRE_THROWS_AS(QSeries(0, {Int(0), Int(1)}), error);
    REQUIRE_THROWS_AS(a.dilate(0), error);
}

TEST_CASE("raw series witnesses")
{
    RawSeries a{Int(0), Int(0), Int(3), Int(1)};
    REQUIRE(raw_leading_exponent(a) == 2);
    RawSeries zero{Int(0), Int(0)};
    REQUIRE_THROWS_AS(raw_leading_exponent(zero), error);

    RawSeries d1 = raw_delta_dilated(40, 1);
    RawSeries d5 = raw_delta_dilated(40, 5);
    REQUIRE(raw_leading_exponent(d1) == 1);
    REQUIRE(raw_leading_exponent(d5) == 5);
    REQUIRE(raw_leading_exponent(raw_mul(d1, d5)) == 6);
    REQUIRE(d5[10] == -24);
}
