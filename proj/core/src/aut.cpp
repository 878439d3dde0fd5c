#include "ratcubic/aut.hpp"

namespace ratcubic {

const char* to_string(AutLabel l) {
    switch (l) {
        case AutLabel::E: return "{e}";
        case AutLabel::C2_1: return "C2-1";
        case AutLabel::C2_2: return "C2-2";
        case AutLabel::C3: return "C3";
        case AutLabel::V4_1: return "V4-1";
        case AutLabel::V4_2: return "V4-2";
        case AutLabel::A4: return "A4";
        case AutLabel::D4: return "D4";
    }
    return "?";
}

AutLabel label_from_string(const std::string& s) {
    for (AutLabel l : {AutLabel::E, AutLabel::C2_1, AutLabel::C2_2, AutLabel::C3,
                       AutLabel::V4_1, AutLabel::V4_2, AutLabel::A4, AutLabel::D4})
        if (s == to_string(l)) return l;
    throw std::invalid_argument("unknown automorphism label: '" + s + "'");
}

int numeric_code(AutLabel l) {
    switch (l) {
        case AutLabel::A4: return 0;
        case AutLabel::C2_1: return 1;
        case AutLabel::C2_2: return 2;
        case AutLabel::D4: return 3;
        case AutLabel::V4_1: return 4;
        case AutLabel::V4_2: return 5;
        case AutLabel::E: return 6;
        case AutLabel::C3: return 7;
    }
    return -1;
}

AutLabel label_from_code(int code) {
    switch (code) {
        case 0: return AutLabel::A4;
        case 1: return AutLabel::C2_1;
        case 2: return AutLabel::C2_2;
        case 3: return AutLabel::D4;
        case 4: return AutLabel::V4_1;
        case 5: return AutLabel::V4_2;
        case 6: return AutLabel::E;
        case 7: return AutLabel::C3;
    }
    throw std::invalid_argument("unknown automorphism code");
}

Rat l1_equation_printed(const XiTuple& x) {
    const Rat &x0 = x[0], &x1 = x[1], &x4 = x[4], &x5 = x[5];
    const Rat x0_2 = x0 * x0, x0_3 = x0_2 * x0, x0_4 = x0_3 * x0, x0_6 = x0_3 * x0_3;
    const Rat x1_2 = x1 * x1, x1_3 = x1_2 * x1, x1_4 = x1_3 * x1, x1_6 = x1_3 * x1_3;
    const Rat x4_2 = x4 * x4, x4_3 = x4_2 * x4, x4_4 = x4_2 * x4_2, x4_5 = x4_4 * x4,
              x4_6 = x4_3 * x4_3;
    const Rat x5_2 = x5 * x5, x5_4 = x5_2 * x5_2;
    return x0_6 * x1_6 - 54 * x0_4 * x1_4 * x4_2 - Rat(27, 4) * x0_4 * x1_3 * x5_2 -
           27 * x0_3 * x1_4 * x5_2 - 108 * x0_3 * x1_3 * x4_3 + 729 * x0_2 * x1_2 * x4_4 +
           Rat(729, 4) * x0_2 * x1 * x4_2 * x5_2 + Rat(729, 64) * x0_2 * x5_4 +
           729 * x0 * x1_2 * x4_2 * x5_2 + 2916 * x0 * x1 * x4_5 +
           Rat(243, 8) * x0 * x1 * x5_4 + Rat(729, 2) * x0 * x4_3 * x5_2 +
           Rat(729, 4) * x1_2 * x5_4 + 1458 * x1 * x4_3 * x5_2 + 2916 * x4_6 +
           Rat(729, 2) * x4 * x5_4;
}

Rat l3_equation_printed(const XiTuple& x, const Rat& i6) {
    const Rat &x0 = x[0], &x4 = x[4];
    const Rat x0_3 = x0 * x0 * x0, x0_6 = x0_3 * x0_3, x0_9 = x0_6 * x0_3;
    const Rat x4_3 = x4 * x4 * x4, x4_6 = x4_3 * x4_3, x4_9 = x4_6 * x4_3;
    const Rat i2 = i6 * i6, i3 = i2 * i6, i4 = i3 * i6, i5 = i4 * i6, i6p = i5 * i6,
              i7 = i6p * i6;
    return i4 * x0_9 - Rat(2834352) * i3 * x0_6 * x4_3 + Rat(Int("24794911296")) * x0_3 * x4_9 +
           Rat(3779136) * i5 * x0_6 + Rat(Int("892616806656")) * i2 * x0_3 * x4_6 +
           Rat(Int("7140934453248")) * i4 * x0_3 * x4_3 + Rat(Int("4760622968832")) * i6p * x0_3 +
           Rat(Int("1999004627104432128")) * i7;
}

Rat l5_equation_printed(const XiTuple& x, const Rat& i6) {
    const Rat &x1 = x[1], &x2 = x[2];
    const Rat x1_3 = x1 * x1 * x1, x1_6 = x1_3 * x1_3, x1_9 = x1_6 * x1_3;
    const Rat x2_2 = x2 * x2, x2_4 = x2_2 * x2_2;
    const Rat i2 = i6 * i6, i3 = i2 * i6;
    return 72 * x1_6 * x2_2 - 16 * x1_9 + 96 * x1_6 * i6 - 81 * x1_3 * x2_4 -
           216 * x1_3 * x2_2 * i6 - 144 * x1_3 * i2 + 36 * x2_4 * i6 + 96 * x2_2 * i2 +
           64 * i3;
}

LocusResiduals locus_residuals(const XiTuple& x, const Rat& i6) {
    LocusResiduals r;
    const Rat &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4], &x5 = x[5];
    r.l1 = {x2, x3, l1_equation_printed(x)};
    r.l2 = {x5, x0 * x0 * x1 + 3 * x0 * x4 - 3 * x3 * x3,
            x0 * x0 * x2 + Rat(1, 2) * x0 * x1 * x3 - 3 * x3 * x4,
            x0 * x1 * x4 - x0 * x2 * x3 - Rat(1, 2) * x1 * x3 * x3 + 3 * x4 * x4};
    r.l3 = x0 * x0 * x0 + 36 * x0 * x4 + 432 * i6;
    r.l4 = {x0 * x1 + 3 * x4, x2, x3, x5};
    r.l5 = x1 * x1 * x1 - 6 * x2 * x2 - 8 * i6;
    r.l6 = {x0, x1, x3, x4, x5};
    r.l7 = {x0, x2, x3, x4, x5};
    return r;
}

bool c3_family_match(const XiTuple& x, const Rat& i6, Rat* t_out) {
    // Family values: xi = mu*(-2, 1/6) on the even weight-2 slots,
    // xi4 = mu^2 (54t-1)/9, I6 = mu^3 t, and odd slots through squares:
    // 72^2 xi2^2 = mu^3 (27t+2)^2 with xi3 = -24 xi2.
    if (x[0] == 0 || x[1] == 0) return false;
    const Rat mu = -x[0] / 2;
    if (mu != 6 * x[1] || mu == 0) return false;
    const Rat t = (9 * x[4] / (mu * mu) + 1) / 54;
    if (t == 0) return false;
    if (Rat(72 * 72) * x[2] * x[2] != mu * mu * mu * (27 * t + 2) * (27 * t + 2)) return false;
    if (x[3] != -24 * x[2]) return false;
    if (x[5] != mu * mu * mu * (-t * (27 * t - 16) / 4)) return false;
    if (i6 != mu * mu * mu * t) return false;
    if (t_out) *t_out = t;
    return true;
}

RationalMap3 family_representative(AutLabel locus, const Rat& p0, const Rat& p1) {
    using C = RationalMap3::Coeffs;
    const Rat t = p0, s = p1;
    switch (locus) {
        case AutLabel::C2_1:
            if (t * s == 1)
                throw std::invalid_argument("C2-1 family: t s = 1 makes I6 = (ts-1)^2 vanish");
            return RationalMap3::raw(C{1, 0, t, 0, 0, s, 0, 1});
        case AutLabel::C2_2:
            if (t * s == 1)
                throw std::invalid_argument("C2-2 family: t s = 1 makes I6 = -(ts-1)^2 vanish");
            return RationalMap3::raw(C{0, s, 0, 1, 1, 0, t, 0});
        case AutLabel::C3:
            if (t == 0)
                throw std::invalid_argument("C3 family: t = 0 makes I6 = t vanish");
            return RationalMap3::raw(C{1, 0, 0, -t, 0, 0, 1, 0});
        case AutLabel::V4_1:
            if (t * t == 1)
                throw std::invalid_argument("V4-1 family: t^2 = 1 makes I6 = -(t^2-1)^2 vanish");
            return RationalMap3::raw(C{0, t, 0, 1, 1, 0, t, 0});
        case AutLabel::V4_2:
            if (t == 0 || t == 1 || t == -1)
                throw std::invalid_argument(
                    "V4-2 family: s in {0, 1, -1} violates I6 = -s(s^2-1)^2 != 0");
            return RationalMap3::raw(C{0, t, 0, -1, 1, 0, -t, 0});
        case AutLabel::A4:
            return RationalMap3::raw(C{1, 0, 0, -3, 0, -3, 0, 0});
        case AutLabel::D4:
            return RationalMap3::raw(C{0, 0, 0, 1, 1, 0, 0, 0});
        case AutLabel::E:
            throw std::invalid_argument("no normal form family for the trivial locus");
    }
    throw std::invalid_argument("unknown locus");
}

AutLabel classify(const XiTuple& x, const Rat& i6) {
    if (i6 == 0) throw NotARationalMap("classify: I6 = 0");
    const bool z0 = x[0] == 0, z1 = x[1] == 0, z2 = x[2] == 0, z3 = x[3] == 0,
               z4 = x[4] == 0, z5 = x[5] == 0;
    if (z0 && z2 && z3 && z4 && z5 && !z1) return AutLabel::D4;
    if (z0 && z1 && z3 && z4 && z5 && !z2) return AutLabel::A4;
    if (z2 && z3 && z5 && x[0] * x[1] + 3 * x[4] == 0) return AutLabel::V4_1;
    if (z0 && z3 && z4 && z5 && x[1] * x[1] * x[1] - 6 * x[2] * x[2] - 8 * i6 == 0)
        return AutLabel::V4_2;
    if (x[0] * x[0] * x[0] + 36 * x[0] * x[4] + 432 * i6 == 0 && c3_family_match(x, i6))
        return AutLabel::C3;
    // On the moduli hypersurface the slice xi2 = xi3 = 0 carries no further
    // degree-24 condition (the published L1 equation reduces to a syzygy
    // multiple there), so the pattern is the whole membership test.
    if (z2 && z3) return AutLabel::C2_1;
    {
        const LocusResiduals r = locus_residuals(x, i6);
        bool all = true;
        for (const auto& v : r.l2) all = all && v == 0;
        if (all) return AutLabel::C2_2;
    }
    return AutLabel::E;
}

AutLabel classify(const RationalMap3& phi) {
    const Rat i6 = i6_resultant(phi);
    return classify(xi_explicit(phi), i6);
}

namespace {

// Raw-value matchers for the published labeling: the point's xi must equal
// the family's parametric value literally (no weighted rescaling).
bool match_l1_raw(const XiTuple& x) {
    if (x[2] != 0 || x[3] != 0) return false;
    const Rat u = (x[0] / 2 - 2 * x[1] - 8) / 4;
    const Rat v = 2 * x[1] - 1 + u;
    if (x[0] != 2 * (v + 3 * u + 9)) return false;
    if (2 * x[1] != v - u + 1) return false;
    if (x[4] != -Rat(1, 3) * (v * v + 3 * u * u + 2 * u * v - 14 * v - 6 * u + 9)) return false;
    if (x[5] != (u * u - 4 * v) * (3 - u - v)) return false;
    if (v == 1) return false;                        // ts = 1 is degenerate
    return is_rational_square(u * u - 4 * v);        // t, s themselves rational
}

bool match_l2_raw(const XiTuple& x) {
    if (x[5] != 0) return false;
    if (x[0] != 0) {
        const Rat u = -x[0] / 2;
        const Rat v = -3 * x[3] / x[0];
        if (x[1] != (v * v - 12) / 6) return false;
        if (x[2] != -v * (v * v + 36) / 36) return false;
        if (x[3] != Rat(2, 3) * u * v) return false;
        if (x[4] != -u * (v * v + 12) / 9) return false;
        return is_rational_square(u);  // u = (t+s)^2
    }
    if (x[3] != 0 || x[4] != 0) return false;
    Rat root;
    const Rat vsq = 6 * x[1] + 12;
    if (vsq < 0 || !is_rational_square(vsq, &root)) return false;
    return x[2] == -root * (vsq + 36) / 36 || x[2] == root * (vsq + 36) / 36;
}

bool match_l3_raw_flipped(const XiTuple& x) {
    // The published run stored antipodal representatives, so its raw match
    // sees the odd-weight slots negated.
    if (x[0] != -2 || x[1] != Rat(1, 6)) return false;
    const Rat x2 = -x[2], x3 = -x[3];
    const Rat t = (72 * x2 - 2) / 27;
    if (t == 0) return false;
    if (x3 != -(27 * t + 2) / 3) return false;
    if (x[4] != (54 * t - 1) / 9) return false;
    return x[5] == -t * (27 * t - 16) / 4;
}

bool match_l4_raw(const XiTuple& x) {
    if (x[2] != 0 || x[3] != 0 || x[5] != 0) return false;
    if (x[1] != -2) return false;
    const Rat t2 = -x[0] / 8;
    if (t2 == 1) return false;
    if (x[4] != -Rat(16, 3) * t2) return false;
    return is_rational_square(t2);
}

bool match_l5_raw(const XiTuple& x) {
    if (x[0] != 0 || x[3] != 0 || x[4] != 0 || x[5] != 0 || x[2] == 0) return false;
    Rat s;
    const Rat w = (3 * x[1] - 6) / 2;  // s^2
    if (w < 0 || !is_rational_square(w, &s)) return false;
    for (const Rat& sv : {s, Rat(-s)}) {
        if (sv == 0 || sv == 1 || sv == -1) continue;
        if (x[2] == -Rat(2, 9) * sv * (sv * sv - 9)) return true;
    }
    return false;
}

}  // namespace

AutLabel classify_published(const XiTuple& x, const Rat& i6) {
    if (i6 == 0) throw NotARationalMap("classify_published: I6 = 0");
    const bool z0 = x[0] == 0, z1 = x[1] == 0, z2 = x[2] == 0, z3 = x[3] == 0,
               z4 = x[4] == 0, z5 = x[5] == 0;
    if (z0 && z2 && z3 && z4 && z5 && !z1) return AutLabel::D4;
    if (z0 && z1 && z3 && z4 && z5 && !z2) return AutLabel::A4;
    if (match_l1_raw(x)) return AutLabel::C2_1;
    if (match_l2_raw(x)) return AutLabel::C2_2;
    if (match_l3_raw_flipped(x)) return AutLabel::C3;
    if (match_l4_raw(x)) return AutLabel::V4_1;
    if (match_l5_raw(x)) return AutLabel::V4_2;
    return AutLabel::E;
}

AutLabel classify_published(const RationalMap3& phi) {
    return classify_published(xi_explicit(phi), i6_resultant(phi));
}

}  // namespace ratcubic
