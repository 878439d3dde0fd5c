#include "ratcubic/rational_map.hpp"

namespace ratcubic {

namespace {

BinaryForm block_form(const std::array<Rat, 8>& c, int base) {
    // c[base] is the z^3 coefficient: coeff of x^i y^(3-i) is c[base + 3 - i].
    BinaryForm f(3);
    for (int i = 0; i <= 3; ++i) f.set_coeff(i, c[base + 3 - i]);
    return f;
}

}  // namespace

RationalMap3 RationalMap3::validated(Coeffs c) {
    RationalMap3 m = raw(std::move(c));
    if (m.numerator_zero() || m.denominator_zero())
        throw NotARationalMap("not a degree-3 rational map (zero block)");
    if (resultant(m.numerator(), m.denominator()) == 0)
        throw NotARationalMap("not a degree-3 rational map (I6 = 0)");
    return m;
}

BinaryForm RationalMap3::numerator() const { return block_form(c_, 0); }
BinaryForm RationalMap3::denominator() const { return block_form(c_, 4); }

bool RationalMap3::numerator_zero() const {
    return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}
bool RationalMap3::denominator_zero() const {
    return c_[4] == 0 && c_[5] == 0 && c_[6] == 0 && c_[7] == 0;
}

bool projectively_equal(const RationalMap3& a, const RationalMap3& b) {
    int ia = -1, ib = -1;
    for (int i = 0; i < 8; ++i) {
        if (a.coeff(i) != 0 && ia < 0) ia = i;
        if (b.coeff(i) != 0 && ib < 0) ib = i;
    }
    if (ia != ib) return false;
    if (ia < 0) return true;  // both zero tuples
    const Rat lambda = b.coeff(ia) / a.coeff(ia);
    if (lambda == 0) return false;
    for (int i = 0; i < 8; ++i)
        if (b.coeff(i) != lambda * a.coeff(i)) return false;
    return true;
}

RationalMap3 conjugate_map(const RationalMap3& phi, const MobiusMap& sigma) {
    if (sigma.det() == 0) throw std::invalid_argument("conjugate_map: singular sigma");
    const BinaryForm f0s = act(phi.numerator(), sigma);
    const BinaryForm f1s = act(phi.denominator(), sigma);
    const BinaryForm num = sigma.e * f0s - sigma.b * f1s;
    const BinaryForm den = (-sigma.c) * f0s + sigma.a * f1s;
    RationalMap3::Coeffs c;
    for (int i = 0; i <= 3; ++i) {
        c[3 - i] = num.coeff(i);      // x^i y^(3-i)  ->  z^i slot
        c[7 - i] = den.coeff(i);
    }
    return RationalMap3::raw(std::move(c));
}

std::pair<BinaryForm, BinaryForm> associated_pair(const RationalMap3& phi) {
    const BinaryForm f0 = phi.numerator(), f1 = phi.denominator();
    BinaryForm I(4);
    // y*f0 - x*f1
    for (int i = 0; i <= 3; ++i) I.set_coeff(i, f0.coeff(i));
    for (int i = 0; i <= 3; ++i) I.set_coeff(i + 1, I.coeff(i + 1) - f1.coeff(i));
    const BinaryForm J = f0.dx() + f1.dy();
    return {I, J};
}

Rat modular_resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != 4 || g.degree() != 2)
        throw std::invalid_argument("modular_resultant: degrees must be (4, 2)");
    // num = x g + df/dy ; den = y g - df/dx, both cubic forms
    BinaryForm num(3), den(3);
    const BinaryForm fy = f.dy(), fx = f.dx();
    for (int i = 0; i <= 2; ++i) num.set_coeff(i + 1, g.coeff(i));
    for (int i = 0; i <= 3; ++i) num.set_coeff(i, num.coeff(i) + fy.coeff(i));
    for (int i = 0; i <= 2; ++i) den.set_coeff(i, g.coeff(i));
    for (int i = 0; i <= 3; ++i) den.set_coeff(i, den.coeff(i) - fx.coeff(i));
    if (num.is_zero() || den.is_zero()) return Rat(0);
    return resultant(num, den);
}

RationalMap3 inverse_associated(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != 4 || g.degree() != 2)
        throw std::invalid_argument("inverse_associated: degrees must be (4, 2)");
    BinaryForm num(3), den(3);
    const BinaryForm fy = f.dy(), fx = f.dx();
    for (int i = 0; i <= 2; ++i) num.set_coeff(i + 1, g.coeff(i));
    for (int i = 0; i <= 3; ++i) num.set_coeff(i, num.coeff(i) + fy.coeff(i));
    for (int i = 0; i <= 2; ++i) den.set_coeff(i, g.coeff(i));
    for (int i = 0; i <= 3; ++i) den.set_coeff(i, den.coeff(i) - fx.coeff(i));
    if (num.is_zero() || den.is_zero() || resultant(num, den) == 0)
        throw NotARationalMap("pair lies on the moduli resultant locus (Delta = 0)");
    RationalMap3::Coeffs c;
    for (int i = 0; i <= 3; ++i) {
        c[3 - i] = num.coeff(i);
        c[7 - i] = den.coeff(i);
    }
    return RationalMap3::raw(std::move(c));
}

std::array<Rat, 5> fixed_point_form(const RationalMap3& phi) {
    // S(t) = F(t) - t G(t); F(t) = c0 t^3 + ... + c3, G likewise.
    const auto& c = phi.coeffs();
    std::array<Rat, 5> s{};
    s[0] = c[3];
    s[1] = c[2] - c[7];
    s[2] = c[1] - c[6];
    s[3] = c[0] - c[5];
    s[4] = -c[4];
    return s;
}

}  // namespace ratcubic
