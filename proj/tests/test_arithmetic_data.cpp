#include "tamefit/arithmetic_data.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <set>

using namespace tamefit;

namespace {
Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
}  // namespace

TEST_CASE("fundamental discriminants") {
    std::set<long> fundamental_up_to_30 = {5, 8, 12, 13, 17, 21, 24, 28, 29};
    for (long d = 2; d <= 30; ++d)
        CHECK(is_fundamental_discriminant(d) == (fundamental_up_to_30.count(d) > 0));
    CHECK_FALSE(is_fundamental_discriminant(1));
    CHECK_FALSE(is_fundamental_discriminant(-3));
    CHECK_THROWS_AS(QuadraticFieldData(7), ValidationError);
}

TEST_CASE("prime splitting") {
    CHECK(splitting_type(QuadraticFieldData(5), 11) == SplittingType::split);
    CHECK(splitting_type(QuadraticFieldData(5), 2) == SplittingType::inert);
    CHECK(splitting_type(QuadraticFieldData(8), 2) == SplittingType::ramified);
    CHECK_THROWS_AS(splitting_type(QuadraticFieldData(5), 9), ValidationError);
}

TEST_CASE("prime set S") {
    PrimeSetS minimal(QuadraticFieldData(12));
    CHECK(minimal.finite_primes() == std::vector<Integer>{2, 3});
    PrimeSetS extended(QuadraticFieldData(5), {Integer(11), Integer(3)});
    CHECK(extended.finite_primes() == std::vector<Integer>{3, 5, 11});
    CHECK(extended.contains(5));
    CHECK_FALSE(extended.contains(7));

    CHECK_THROWS_AS(PrimeSetS(QuadraticFieldData(5), {Integer(5)}), ValidationError);
    CHECK_THROWS_AS(PrimeSetS(QuadraticFieldData(5), {Integer(6)}), ValidationError);
    CHECK_THROWS_AS(PrimeSetS(QuadraticFieldData(5), {Integer(3), Integer(3)}),
                    ValidationError);
}

TEST_CASE("zeta values at -1 by the divisor sum") {
    CHECK(siegel_zeta_minus1(QuadraticFieldData(5)) == Rational(1, 30));
    CHECK(siegel_zeta_minus1(QuadraticFieldData(8)) == Rational(1, 12));
    CHECK(siegel_zeta_minus1(QuadraticFieldData(12)) == Rational(1, 6));
    CHECK(siegel_zeta_minus1(QuadraticFieldData(13)) == Rational(1, 6));
}

TEST_CASE("zeta values are positive with denominator dividing 60") {
    for (long d = 5; d <= 5000; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        Rational z = siegel_zeta_minus1(QuadraticFieldData(d));
        CHECK(z > 0);
        CHECK(60 % z.get_den() == 0);
    }
}

TEST_CASE("orders of the twisted root-of-unity modules") {
    CHECK(w2_rational_field() == 24);
    CHECK(w2_field(QuadraticFieldData(5)) == 120);
    CHECK(w2_field(QuadraticFieldData(8)) == 48);
    CHECK(w2_field(QuadraticFieldData(12)) == 24);
    CHECK(w2_field(QuadraticFieldData(13)) == 24);
}

TEST_CASE("w2 against the raised-bound search") {
    CHECK(w2_field_bruteforce(1, 512) == 24);
    for (long d = 5; d <= 100; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        Integer expected = 24;
        if (d == 5) expected *= 5;
        if (d == 8) expected *= 2;
        CHECK(w2_field(QuadraticFieldData(d)) == expected);
        CHECK(w2_field_bruteforce(d, 512) == expected);
    }
}

TEST_CASE("first layer detection") {
    CHECK(is_first_layer(QuadraticFieldData(8)));
    CHECK_FALSE(is_first_layer(QuadraticFieldData(5)));
    CHECK_FALSE(is_first_layer(QuadraticFieldData(12)));
}

TEST_CASE("tau unit") {
    CHECK(tau_unit(24, 120, false) == 49);
    CHECK(tau_unit(24, 48, true) == 25);
    CHECK(tau_unit(24, 24, false) == 1);

    CHECK_THROWS_AS(tau_unit(24, 48, false), std::invalid_argument);
    CHECK_THROWS_AS(tau_unit(24, 24, true), std::invalid_argument);
    CHECK_THROWS_AS(tau_unit(4, 8, false), std::invalid_argument);
    // an odd prime dividing w_e to higher order than a nontrivial w_f part
    CHECK_THROWS_AS(tau_unit(24, 216, false), std::invalid_argument);
}

TEST_CASE("tau unit is the unique candidate for field-arising pairs") {
    std::set<std::pair<long, long>> seen;
    for (long d = 5; d <= 500; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        QuadraticFieldData field(d);
        long w_f = w2_rational_field().get_si();
        long w_e = w2_field(field).get_si();
        if (!seen.insert({w_f, w_e}).second) continue;
        bool first_layer = is_first_layer(field);
        Integer expected = tau_unit(w_f, w_e, first_layer);
        long matches = 0;
        for (long u = 0; u < w_e; ++u) {
            if ((u * u - 1) % w_e != 0) continue;
            if (gcd(Integer(u - 1), Integer(w_e)) != w_f) continue;
            ++matches;
            CHECK(u == expected);
        }
        CHECK(matches == 1);
    }
}

TEST_CASE("theta at -1") {
    QuadraticFieldData d5(5);
    GroupRingElement theta5 = theta_minus1(d5, PrimeSetS(d5));
    CHECK(theta5 == GroupRingElement{Rational(-1, 30), Rational(11, 30)});
    CHECK(theta5.components() == ComponentPair{Rational(1, 3), Rational(-2, 5)});

    QuadraticFieldData d8(8);
    CHECK(theta_minus1(d8, PrimeSetS(d8)).components() ==
          ComponentPair{Rational(1, 12), Rational(-1)});

    GroupRingElement extended = theta_minus1(d5, PrimeSetS(d5, {Integer(11)}));
    CHECK(extended.components() == ComponentPair{Rational(-10, 3), Rational(4)});
}

TEST_CASE("adding primes to S scales theta by the local factor") {
    testgen::Rng rng(testgen::kDefaultSeed + 40);
    std::vector<long> discs;
    for (long d = 5; d <= 200; ++d)
        if (is_fundamental_discriminant(d)) discs.push_back(d);
    for (int trial = 0; trial < 100; ++trial) {
        QuadraticFieldData field(discs[rng() % discs.size()]);
        Integer p = testgen::random_int(rng, 3, 60);
        if (!is_prime(p) || field.discriminant % p == 0) continue;
        ComponentPair base = theta_minus1(field, PrimeSetS(field)).components();
        ComponentPair bigger =
            theta_minus1(field, PrimeSetS(field, {p})).components();
        CHECK(bigger.plus == base.plus * (1 - p));
        if (splitting_type(field, p) == SplittingType::split)
            CHECK(bigger.minus == base.minus * (1 - p));
        else
            CHECK(bigger.minus == base.minus * (1 + p));
    }
}

TEST_CASE("birch-tate invariants for the worked cases") {
    QuadraticFieldData d5(5);
    ExtensionInvariants inv5 = birch_tate_invariants(d5, PrimeSetS(d5));
    CHECK(inv5.k_plus == 8);  // |K2(Z[1/5])| = 2 * |F_5^x|
    CHECK(inv5.k_e == 16);
    CHECK(inv5.k_minus == 4);
    CHECK(inv5.w_f == 24);
    CHECK(inv5.w_e == 120);
    CHECK(inv5.u == 49);
    CHECK(inv5.w_plus == 24);
    CHECK(inv5.w_minus == 10);
    CHECK(inv5.size_s == 2);
    CHECK(inv5.size_se == 3);
    CHECK_FALSE(inv5.first_layer);

    QuadraticFieldData d8(8);
    ExtensionInvariants inv8 = birch_tate_invariants(d8, PrimeSetS(d8));
    CHECK(inv8.k_plus == 2);
    CHECK(inv8.k_e == 4);
    CHECK(inv8.k_minus == 2);
    CHECK(inv8.first_layer);

    QuadraticFieldData d12(12);
    ExtensionInvariants inv12 = birch_tate_invariants(d12, PrimeSetS(d12));
    CHECK(inv12.zeta_f_s == Rational(-1, 6));
    CHECK(inv12.zeta_e_s == Rational(1, 3));
    CHECK(inv12.size_s == 3);
    CHECK(inv12.size_se == 4);
    CHECK(inv12.k_plus == 4);
    CHECK(inv12.k_e == 8);
    CHECK(inv12.k_minus == 4);
}

TEST_CASE("manual assembly rejects non-integral orders") {
    CHECK_THROWS_AS(
        assemble_invariants(24, 120, Rational(1, 5), Rational(-2, 15), 2, 3, false),
        BirchTateViolation);
    CHECK_THROWS_AS(
        assemble_invariants(24, 120, Rational(-1, 3), Rational(-2, 15), 2, 3, false),
        BirchTateViolation);  // negative k_plus
    CHECK_NOTHROW(
        assemble_invariants(24, 120, Rational(1, 3), Rational(-2, 15), 2, 3, false));
}

TEST_CASE("the L-value identities hold exactly for every discriminant up to 500") {
    for (long d = 5; d <= 500; ++d) {
        if (!is_fundamental_discriminant(d)) continue;
        QuadraticFieldData field(d);
        PrimeSetS s(field);
        ExtensionInvariants inv = birch_tate_invariants(field, s);
        ComponentPair theta = theta_minus1(field, s).components();

        // sign-normalized theta has components k+/w_F and
        // (-1)^|S_E| (w_F/w_E)(k_E/k+)
        int sign_s = inv.size_s % 2 == 0 ? 1 : -1;
        int sign_se = inv.size_se % 2 == 0 ? 1 : -1;
        CHECK(sign_s * theta.plus == frac(inv.k_plus, inv.w_f));
        CHECK(sign_s * theta.minus ==
              sign_se * frac(inv.w_f, inv.w_e) * frac(inv.k_e, inv.k_plus));

        // multiplying by the w-orders lands on the k-orders up to sign
        CHECK(abs(inv.w_plus * theta.plus) == inv.k_plus);
        CHECK(abs(inv.w_minus * theta.minus) == inv.k_minus);
    }
}
