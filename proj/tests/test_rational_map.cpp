#include <doctest.h>

#include <random>

#include "ratcubic/invariants.hpp"

using namespace ratcubic;

namespace {

std::mt19937_64 rng(777);

RationalMap3 rnd_map(int bound = 9) {
    std::uniform_int_distribution<int> d(-bound, bound);
    for (;;) {
        RationalMap3::Coeffs c;
        for (auto& v : c) v = d(rng);
        RationalMap3 m = RationalMap3::raw(c);
        if (m.numerator_zero() || m.denominator_zero()) continue;
        if (resultant(m.numerator(), m.denominator()) != 0) return m;
    }
}

MobiusMap rnd_mobius() {
    std::uniform_int_distribution<int> d(-5, 5);
    for (;;) {
        Rat a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a * e - b * c != 0) return MobiusMap(a, b, c, e);
    }
}

}  // namespace

TEST_CASE("validated rejects I6 = 0 and zero blocks") {
    CHECK_THROWS_AS(RationalMap3::validated({1, 0, 0, 0, 1, 0, 0, 0}), NotARationalMap);
    CHECK_THROWS_AS(RationalMap3::validated({0, 0, 0, 0, 1, 0, 0, 1}), NotARationalMap);
    CHECK_NOTHROW(RationalMap3::validated({2, 3, -1, -3, 1, 2, -3, 1}));
}

TEST_CASE("conjugation by the identity is projectively trivial") {
    const RationalMap3 phi = rnd_map();
    CHECK(projectively_equal(phi, conjugate_map(phi, MobiusMap(1, 0, 0, 1))));
}

TEST_CASE("odd L1 family members commute with z -> -z") {
    // (z^3 + t z)/(s z^2 + 1) conjugated by -z returns the same tuple
    for (int t = -3; t <= 3; ++t)
        for (int s = -3; s <= 3; ++s) {
            if (t * s == 1) continue;
            const RationalMap3 phi =
                RationalMap3::raw({1, 0, t, 0, 0, s, 0, 1});
            const RationalMap3 conj = conjugate_map(phi, MobiusMap(-1, 0, 0, 1));
            CHECK(projectively_equal(phi, conj));
        }
}

TEST_CASE("1/z^3 commutes with z -> 1/z") {
    const RationalMap3 phi = RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0});
    const RationalMap3 conj = conjugate_map(phi, MobiusMap(0, 1, 1, 0));
    CHECK(projectively_equal(phi, conj));
}

TEST_CASE("conjugating by sigma then its inverse is projectively trivial") {
    for (int iter = 0; iter < 20; ++iter) {
        const RationalMap3 phi = rnd_map();
        const MobiusMap s = rnd_mobius();
        const RationalMap3 back = conjugate_map(conjugate_map(phi, s), s.inverse());
        CHECK(projectively_equal(phi, back));
    }
}

TEST_CASE("associated pair of 1/z^3") {
    const RationalMap3 phi = RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0});
    const auto [I, J] = associated_pair(phi);
    // I = y^4 - x^4, J = 0
    BinaryForm expect(4);
    expect.set_coeff(0, 1);
    expect.set_coeff(4, -1);
    CHECK(I == expect);
    CHECK(J.is_zero());
}

TEST_CASE("associated pair is linear in the coefficients") {
    const RationalMap3 phi = rnd_map();
    RationalMap3::Coeffs scaled;
    for (int i = 0; i < 8; ++i) scaled[i] = 5 * phi.coeff(i);
    const auto [I1, J1] = associated_pair(phi);
    const auto [I2, J2] = associated_pair(RationalMap3::raw(scaled));
    CHECK(I2 == Rat(5) * I1);
    CHECK(J2 == Rat(5) * J1);
}

TEST_CASE("equivariance: (I, J) of a det-1 conjugate is the acted pair") {
    for (int iter = 0; iter < 100; ++iter) {
        const RationalMap3 phi = rnd_map(5);
        // random det-1 matrix: [[a, b], [c, (1+bc)/a]] with a != 0
        std::uniform_int_distribution<int> d(-4, 4);
        Rat a = 0, b, c;
        while (a == 0) a = d(rng);
        b = d(rng);
        c = d(rng);
        const MobiusMap s(a, b, c, (1 + b * c) / a);
        REQUIRE(s.det() == 1);
        const auto [I, J] = associated_pair(phi);
        const auto [Ic, Jc] = associated_pair(conjugate_map(phi, s));
        CHECK(Ic == act(I, s));
        CHECK(Jc == act(J, s));
    }
}

TEST_CASE("inverse_associated round trip") {
    const RationalMap3 phi = RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0});
    const auto [I, J] = associated_pair(phi);
    CHECK(projectively_equal(phi, inverse_associated(I, J)));
    for (int iter = 0; iter < 1000; ++iter) {
        const RationalMap3 m = rnd_map();
        const auto [f, g] = associated_pair(m);
        CHECK(projectively_equal(m, inverse_associated(f, g)));
    }
}

TEST_CASE("inverse_associated rejects pairs on the resultant locus") {
    BinaryForm f(4), g(2);
    f.set_coeff(4, 1);  // f = x^4, g = 0
    CHECK(modular_resultant(f, g) == 0);
    CHECK_THROWS_AS(inverse_associated(f, g), NotARationalMap);
}

TEST_CASE("fixed point form") {
    // z^3: S(t) = t^3 - t
    const auto s1 = fixed_point_form(RationalMap3::raw({1, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(s1 == std::array<Rat, 5>{0, -1, 0, 1, 0});
    // 1/z^3: S(t) = 1 - t^4
    const auto s2 = fixed_point_form(RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0}));
    CHECK(s2 == std::array<Rat, 5>{1, 0, 0, 0, -1});
}

TEST_CASE("automorphisms permute the rational fixed points") {
    // family (z^3 + t z)/(s z^2 + 1) with sigma(z) = -z
    for (int t = -2; t <= 2; ++t)
        for (int s = -2; s <= 2; ++s) {
            if (t * s == 1) continue;
            const auto S = fixed_point_form(RationalMap3::raw({1, 0, t, 0, 0, s, 0, 1}));
            // S(z) = 0 => S(-z) = 0 for the odd family polynomial
            for (int z = -6; z <= 6; ++z) {
                Rat v1 = 0, v2 = 0, p = 1;
                for (int i = 0; i <= 4; ++i) {
                    v1 += S[i] * p * ((i % 2) ? 1 : 1);
                    p *= z;
                }
                p = 1;
                for (int i = 0; i <= 4; ++i) {
                    v2 += S[i] * p;
                    p *= -z;
                }
                if (v1 == 0) CHECK(v2 == 0);
            }
        }
}

TEST_CASE("validity is equivalent to coprime dehomogenizations") {
    // resultant != 0 iff the polynomial gcd of numerator and denominator is
    // constant; exercised via shared-root constructions
    const RationalMap3 shared = RationalMap3::raw({1, -1, 0, 0, 1, 0, -1, 0});
    // numerator z^3 - z^2 = z^2(z-1), denominator z^3 - z = z(z-1)(z+1)
    CHECK(resultant(shared.numerator(), shared.denominator()) == 0);
    CHECK_THROWS_AS(RationalMap3::validated(shared.coeffs()), NotARationalMap);
}
