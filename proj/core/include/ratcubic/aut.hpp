#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratcubic/weighted.hpp"

namespace ratcubic {

// Automorphism classes of rational cubics; one label per map.
// S4 and A5 cannot occur (element orders are at most 4).
enum class AutLabel { E, C2_1, C2_2, C3, V4_1, V4_2, A4, D4 };

// Database strings: "{e}", "C2-1", "C2-2", "C3", "V4-1", "V4-2", "A4", "D4".
const char* to_string(AutLabel l);
AutLabel label_from_string(const std::string& s);

// Numeric codes used by the classification experiment:
// A4=0, C2-1=1, C2-2=2, D4=3, V4-1=4, V4-2=5, {e}=6, C3=7.
int numeric_code(AutLabel l);
AutLabel label_from_code(int code);

// Exact residual vectors of the locus equations; every entry is a
// weighted-homogeneous polynomial in (xi, I6), so vanishing depends only on
// the weighted point.
struct LocusResiduals {
    std::array<Rat, 3> l1;  // xi2, xi3, published L1 equation (see note below)
    std::array<Rat, 4> l2;  // xi5; x0^2x1+3x0x4-3x3^2; x0^2x2+x0x1x3/2-3x3x4;
                            // x0x1x4-x0x2x3-x1x3^2/2+3x4^2
    Rat l3;                 // xi0^3 + 36 xi0 xi4 + 432 I6
    std::array<Rat, 4> l4;  // xi0 xi1 + 3 xi4; xi2; xi3; xi5
    Rat l5;                 // xi1^3 - 6 xi2^2 - 8 I6
    std::array<Rat, 5> l6;  // xi0, xi1, xi3, xi4, xi5 (point: only xi2 != 0)
    std::array<Rat, 5> l7;  // xi0, xi2, xi3, xi4, xi5 (point: only xi1 != 0)
};
LocusResiduals locus_residuals(const XiTuple& xi, const Rat& i6);

// The published L1 equation as printed. It vanishes identically on the raw
// parametric family but is not weighted-homogeneous (its graded parts have
// degrees 24/26/28), so it is representative-dependent; the homogeneous
// degree-24 content of the family ideal is spanned by syzygy multiples.
Rat l1_equation_printed(const XiTuple& xi);

// The published L3/L5 equations as printed (they fail to vanish on their own
// parametric families under either resultant sign; kept as regression
// witnesses next to the corrected relations above).
Rat l3_equation_printed(const XiTuple& xi, const Rat& i6);
Rat l5_equation_printed(const XiTuple& xi, const Rat& i6);

// Exact membership test for the C3 parametric family: solves for (t, mu)
// with mu = lambda^2 treated as a free rational, verifying the odd-weight
// coordinates through squares (no root extraction).
bool c3_family_match(const XiTuple& xi, const Rat& i6, Rat* t_out = nullptr);

// Normal-form family representatives (coefficient tuples as published):
//   C2_1: (z^3 + t z)/(s z^2 + 1)        params (t, s), t s != 1
//   C2_2: (s z^2 + 1)/(z^3 + t z)        params (t, s), t s != 1
//   C3:   (z^3 - t)/z                    param t != 0
//   V4_1: (t z^2 + 1)/(z^3 + t z)        param t, t^2 != 1
//   V4_2: (s z^2 - 1)/(z^3 - s z)        param s, s not in {0, 1, -1}
//   A4:   (z^3 - 3)/(-3 z^2)             no params
//   D4:   1/z^3                          no params
// Throws std::invalid_argument naming the violated resultant condition.
RationalMap3 family_representative(AutLabel locus, const Rat& p0 = Rat(0),
                                   const Rat& p1 = Rat(0));

// Representative-independent classifier: checks loci from deepest to most
// generic (D4, A4, V4-1, V4-2, C3, C2-1, C2-2) and returns the first match.
// Throws NotARationalMap when I6 = 0.
AutLabel classify(const RationalMap3& phi);
AutLabel classify(const XiTuple& xi, const Rat& i6);

// Emulation of the published database labeling: raw-value family matching
// with no weighted rescaling. Reproduces the published height-1 distribution
// row exactly; undercounts conjugated representatives by construction.
AutLabel classify_published(const XiTuple& xi, const Rat& i6);
AutLabel classify_published(const RationalMap3& phi);

}  // namespace ratcubic
