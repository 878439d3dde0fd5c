#pragma once

#include <array>

#include "ratcubic/rational_map.hpp"

namespace ratcubic {

// The six generating invariants xi0..xi5 of weights (2,2,3,3,4,6).
struct XiTuple {
    static constexpr std::array<int, 6> weights{2, 2, 3, 3, 4, 6};
    std::array<Rat, 6> xi{};

    const Rat& operator[](int i) const { return xi.at(i); }
    Rat& operator[](int i) { return xi.at(i); }
    bool all_zero() const {
        for (const auto& v : xi)
            if (v != 0) return false;
        return true;
    }
    friend bool operator==(const XiTuple& a, const XiTuple& b) { return a.xi == b.xi; }
};

// The published degree-6 polynomials in c0..c7, evaluated exactly.
XiTuple xi_explicit(const RationalMap3& phi);

// Transvectant route: (I,J) from the associated pair, then
// xi0=(J,J)_2, xi1=(I,I)_4, xi2=((I,I)_2,I)_4, xi3=(I,J^2)_4,
// xi4=((I,I)_2,J^2)_4, xi5=(J^3,(I,(I,I)_2)_1)_6.
// Agrees with xi_explicit exactly (no calibration constants required).
XiTuple xi_via_transvectants(const RationalMap3& phi);

// I6 = Res(f0, f1), Sylvester normalization: I6((z^3+tz)/(sz^2+1)) = (ts-1)^2
// and I6 of the golden database record is +211. The published expansion of
// I6 is the negative of this determinant.
Rat i6_resultant(const RationalMap3& phi);

// Degree-6 expression of I6 in the xi; equals i6_resultant exactly.
Rat i6_from_xi(const XiTuple& xi);

// J6 = Res(I_phi, J_phi), three exactly-agreeing routes.
Rat j6_resultant(const RationalMap3& phi);
// The published degree-6 expansion of J6 is stated in the reversed
// coefficient order; this evaluates it accordingly.
Rat j6_explicit(const RationalMap3& phi);
Rat j6_from_xi(const XiTuple& xi);  // xi3^2 - 4 xi0 xi4 + (2/3) xi0^2 xi1

// Single relation cutting the image of the moduli map:
// xi5^2 - [ (1/108)x0^3x1^3 - (1/18)x0^3x2^2 - (1/24)x0x1^2x3^2
//           - (1/6)x2x3^3 + (1/2)x0x2x3x4 + (1/4)x1x3^2x4
//           - (1/4)x0x1x4^2 - (1/2)x4^3 ].
// (The printed version's x0^3 x2^2 coefficient 18 is a typo for 1/18.)
Rat syzygy_residual(const XiTuple& xi);

// Same residual with the typo'd printed coefficient; kept as a regression
// witness that the printed relation fails homogeneity/vanishing.
Rat syzygy_residual_printed(const XiTuple& xi);

struct AbsoluteInvariants {
    std::array<Rat, 5> i{};
    friend bool operator==(const AbsoluteInvariants& a, const AbsoluteInvariants& b) = default;
};

// i1 = xi0^6/I6^2, i2 = xi1^6/I6^2, i3 = xi2^4/I6^2, i4 = xi3^4/I6^2,
// i5 = xi4^3/I6^2. Throws std::domain_error when I6 = 0.
AbsoluteInvariants absolute_invariants(const XiTuple& xi, const Rat& i6);

}  // namespace ratcubic
