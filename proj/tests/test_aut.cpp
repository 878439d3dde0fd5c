#include <doctest.h>

#include <random>

#include "ratcubic/aut.hpp"

using namespace ratcubic;

namespace {

std::mt19937_64 rng(31337);

Rat rnd_param() {
    std::uniform_int_distribution<int> num(-30, 30), den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

MobiusMap rnd_mobius() {
    std::uniform_int_distribution<int> d(-6, 6);
    for (;;) {
        Rat a = d(rng), b = d(rng), c = d(rng), e = d(rng);
        if (a * e - b * c != 0) return MobiusMap(a, b, c, e);
    }
}

XiTuple xi_of(const RationalMap3& m) { return xi_explicit(m); }

XiTuple scaled(const XiTuple& x, const Rat& lambda) {
    XiTuple out;
    for (int i = 0; i < 6; ++i) out[i] = x[i] * pow_rat(lambda, XiTuple::weights[i]);
    return out;
}

}  // namespace

TEST_CASE("label strings and numeric codes round trip") {
    for (AutLabel l : {AutLabel::E, AutLabel::C2_1, AutLabel::C2_2, AutLabel::C3,
                       AutLabel::V4_1, AutLabel::V4_2, AutLabel::A4, AutLabel::D4}) {
        CHECK(label_from_string(to_string(l)) == l);
        CHECK(label_from_code(numeric_code(l)) == l);
    }
    CHECK(std::string(to_string(AutLabel::E)) == "{e}");
    CHECK(numeric_code(AutLabel::D4) == 3);
}

TEST_CASE("family representatives match the published tuples") {
    CHECK(family_representative(AutLabel::D4).coeffs() ==
          RationalMap3::Coeffs{0, 0, 0, 1, 1, 0, 0, 0});
    CHECK(family_representative(AutLabel::A4).coeffs() ==
          RationalMap3::Coeffs{1, 0, 0, -3, 0, -3, 0, 0});
    CHECK(family_representative(AutLabel::C3, 1).coeffs() ==
          RationalMap3::Coeffs{1, 0, 0, -1, 0, 0, 1, 0});
}

TEST_CASE("degenerate family parameters are rejected by name") {
    CHECK_THROWS_AS(family_representative(AutLabel::C2_1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_representative(AutLabel::C3, 0), std::invalid_argument);
    CHECK_THROWS_AS(family_representative(AutLabel::V4_1, 1), std::invalid_argument);
    CHECK_THROWS_AS(family_representative(AutLabel::V4_2, 0), std::invalid_argument);
}

TEST_CASE("classifier point anchors") {
    CHECK(classify(RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0})) == AutLabel::D4);
    CHECK(classify(RationalMap3::raw({1, 0, 0, -3, 0, -3, 0, 0})) == AutLabel::A4);
    CHECK(classify(RationalMap3::raw({2, 3, -1, -3, 1, 2, -3, 1})) == AutLabel::E);
    CHECK_THROWS_AS(classify(RationalMap3::raw({1, 0, 0, 0, 1, 0, 0, 0})), NotARationalMap);
}

TEST_CASE("locus residual vectors are weighted homogeneous") {
    std::uniform_int_distribution<int> num(1, 7), den(1, 7), sg(0, 1);
    for (int iter = 0; iter < 40; ++iter) {
        const RationalMap3 m = family_representative(AutLabel::C2_1, rnd_param(), rnd_param());
        const XiTuple x = xi_of(m);
        const Rat i6 = i6_resultant(m);
        Rat lambda(num(rng), den(rng));
        lambda.canonicalize();
        if (sg(rng)) lambda = -lambda;
        const XiTuple xs = scaled(x, lambda);
        const Rat i6s = i6 * pow_rat(lambda, 6);
        const LocusResiduals r0 = locus_residuals(x, i6);
        const LocusResiduals rs = locus_residuals(xs, i6s);
        // degrees: l2 = (6, 6, 7, 8), l3 = 6, l4 = (4, 3, 3, 6), l5 = 6
        CHECK(rs.l2[1] == pow_rat(lambda, 6) * r0.l2[1]);
        CHECK(rs.l2[2] == pow_rat(lambda, 7) * r0.l2[2]);
        CHECK(rs.l2[3] == pow_rat(lambda, 8) * r0.l2[3]);
        CHECK(rs.l3 == pow_rat(lambda, 6) * r0.l3);
        CHECK(rs.l4[0] == pow_rat(lambda, 4) * r0.l4[0]);
        CHECK(rs.l5 == pow_rat(lambda, 6) * r0.l5);
    }
}

TEST_CASE("corrected locus relations vanish identically on their families") {
    for (int iter = 0; iter < 200; ++iter) {
        const Rat t = rnd_param();
        if (t != 0) {
            const RationalMap3 m = family_representative(AutLabel::C3, t);
            const auto r = locus_residuals(xi_of(m), i6_resultant(m));
            CHECK(r.l3 == 0);
        }
        const Rat s = rnd_param();
        if (s != 0 && s != 1 && s != -1) {
            const RationalMap3 m = family_representative(AutLabel::V4_2, s);
            const auto r = locus_residuals(xi_of(m), i6_resultant(m));
            CHECK(r.l5 == 0);
        }
        if (t * t != 1) {
            const RationalMap3 m = family_representative(AutLabel::V4_1, t);
            const auto r = locus_residuals(xi_of(m), i6_resultant(m));
            for (const auto& v : r.l4) CHECK(v == 0);
        }
    }
}

TEST_CASE("published L1 equation vanishes on the raw family and the L2 system on its own") {
    for (int iter = 0; iter < 200; ++iter) {
        const Rat t = rnd_param(), s = rnd_param();
        if (t * s == 1) continue;
        const RationalMap3 m1 = family_representative(AutLabel::C2_1, t, s);
        const XiTuple x1 = xi_of(m1);
        CHECK(x1[2] == 0);
        CHECK(x1[3] == 0);
        CHECK(l1_equation_printed(x1) == 0);
        const RationalMap3 m2 = family_representative(AutLabel::C2_2, t, s);
        const auto r2 = locus_residuals(xi_of(m2), i6_resultant(m2));
        for (const auto& v : r2.l2) CHECK(v == 0);
    }
}

TEST_CASE("published L3/L5 equations fail on their families (regression witness)") {
    const RationalMap3 m3 = family_representative(AutLabel::C3, 2);
    const Rat i6 = i6_resultant(m3);
    CHECK(l3_equation_printed(xi_of(m3), i6) != 0);
    CHECK(l3_equation_printed(xi_of(m3), -i6) != 0);
    const RationalMap3 m5 = family_representative(AutLabel::V4_2, 4);
    const Rat i65 = i6_resultant(m5);
    CHECK(l5_equation_printed(xi_of(m5), i65) != 0);
    CHECK(l5_equation_printed(xi_of(m5), -i65) != 0);
}

TEST_CASE("c3_family_match recovers the parameter, also after conjugation") {
    const RationalMap3 m = family_representative(AutLabel::C3, 2);
    Rat t;
    CHECK(c3_family_match(xi_of(m), i6_resultant(m), &t));
    CHECK(t == 2);
    const RationalMap3 mc = conjugate_map(m, MobiusMap(2, 0, 0, 1));
    Rat t2;
    CHECK(c3_family_match(xi_of(mc), i6_resultant(mc), &t2));
    CHECK(t2 == 2);
    CHECK_FALSE(c3_family_match(xi_of(RationalMap3::raw({2, 3, -1, -3, 1, 2, -3, 1})),
                                Rat(211)));
}

TEST_CASE("L2 parameter recovery (sign-corrected)") {
    // on the L2 family with J6 != 0: u = -xi0/2 and v = -3 xi3/xi0
    for (int t = -4; t <= 4; ++t)
        for (int s = -4; s <= 4; ++s) {
            if (t * s == 1 || t + s == 0) continue;
            const RationalMap3 m = family_representative(AutLabel::C2_2, t, s);
            const XiTuple x = xi_of(m);
            CHECK(-x[0] / 2 == Rat((t + s) * (t + s)));
            CHECK(-3 * x[3] / x[0] == Rat(s - t));
        }
}

TEST_CASE("family soundness under random conjugation") {
    struct Case {
        AutLabel locus;
        int nparams;
    };
    const Case cases[] = {{AutLabel::C2_1, 2}, {AutLabel::C2_2, 2}, {AutLabel::C3, 1},
                          {AutLabel::V4_1, 1}, {AutLabel::V4_2, 1}, {AutLabel::A4, 0},
                          {AutLabel::D4, 0}};
    for (const auto& cs : cases) {
        for (int rep = 0; rep < 12; ++rep) {
            Rat t = rnd_param(), s = rnd_param();
            RationalMap3 m = [&] {
                for (;;) {
                    try {
                        return family_representative(cs.locus, t, s);
                    } catch (const std::invalid_argument&) {
                        t = rnd_param();
                        s = rnd_param();
                    }
                }
            }();
            AutLabel expected = cs.locus;
            // deeper-locus specializations at degenerate parameters
            if (cs.locus == AutLabel::C2_1 && t == s) expected = AutLabel::V4_1;
            if (cs.locus == AutLabel::C2_1 && t == -3 && s == -3) expected = AutLabel::D4;
            if (cs.locus == AutLabel::C2_2 && t == s && t != 0) expected = AutLabel::V4_1;
            if (cs.locus == AutLabel::C2_2 && t == -s && t != 0) expected = AutLabel::V4_2;
            if (cs.locus == AutLabel::C2_2 && t == 0 && s == 0) expected = AutLabel::D4;
            if (cs.locus == AutLabel::V4_1 && t == 0) expected = AutLabel::D4;
            if (cs.locus == AutLabel::V4_2 && (t == 3 || t == -3)) expected = AutLabel::D4;
            CHECK(classify(m) == expected);
            for (int k = 0; k < 5; ++k) {
                const RationalMap3 mc = conjugate_map(m, rnd_mobius());
                CHECK(classify(mc) == expected);
            }
            if (cs.nparams == 0) break;
        }
    }
}

TEST_CASE("published-table emulation anchors") {
    CHECK(classify_published(RationalMap3::raw({0, 0, 0, 1, 1, 0, 0, 0})) == AutLabel::D4);
    CHECK(classify_published(RationalMap3::raw({2, 3, -1, -3, 1, 2, -3, 1})) == AutLabel::E);
    // verbatim family tuples match their loci
    CHECK(classify_published(family_representative(AutLabel::C2_1, 2, 3)) == AutLabel::C2_1);
    CHECK(classify_published(family_representative(AutLabel::C2_2, 2, 3)) == AutLabel::C2_2);
    // raw-value matching intentionally misses rescaled conjugates
    const RationalMap3 m = family_representative(AutLabel::C2_1, 2, 3);
    const RationalMap3 mc = conjugate_map(m, MobiusMap(2, 0, 0, 1));
    CHECK(classify_published(mc) == AutLabel::E);
    CHECK(classify(mc) == AutLabel::C2_1);
}
