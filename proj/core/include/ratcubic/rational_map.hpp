#pragma once

#include <array>
#include <utility>

#include "ratcubic/binary_form.hpp"

namespace ratcubic {

// A coefficient tuple fails to define a degree-3 rational map (I6 = 0 or a
// zero numerator/denominator block).
struct NotARationalMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree-3 rational map z -> (c0 z^3 + c1 z^2 + c2 z + c3) /
//                           (c4 z^3 + c5 z^2 + c6 z + c7).
// The tuple order is the calibrated database order (z^3 coefficient first).
class RationalMap3 {
public:
    using Coeffs = std::array<Rat, 8>;

    // Unvalidated container; enumeration filters use this.
    static RationalMap3 raw(Coeffs c) { return RationalMap3(std::move(c)); }

    // Checked constructor: both blocks nonzero and resultant != 0.
    static RationalMap3 validated(Coeffs c);

    const Coeffs& coeffs() const { return c_; }
    const Rat& coeff(int i) const { return c_.at(i); }

    BinaryForm numerator() const;    // c0 x^3 + c1 x^2 y + c2 x y^2 + c3 y^3
    BinaryForm denominator() const;  // c4 x^3 + c5 x^2 y + c6 x y^2 + c7 y^3

    bool numerator_zero() const;
    bool denominator_zero() const;

private:
    explicit RationalMap3(Coeffs c) : c_(std::move(c)) {}
    Coeffs c_;
};

// True iff the two coefficient tuples differ by one nonzero global scalar.
bool projectively_equal(const RationalMap3& a, const RationalMap3& b);

// sigma^{-1} . phi . sigma via (e f0^s - b f1^s) / (-c f0^s + a f1^s).
RationalMap3 conjugate_map(const RationalMap3& phi, const MobiusMap& sigma);

// Associated pair (I, J) = (y f0 - x f1, df0/dx + df1/dy), degrees (4, 2).
std::pair<BinaryForm, BinaryForm> associated_pair(const RationalMap3& phi);

// Inverse of the associated-pair map: (x g + df/dy) / (y g - df/dx).
// Throws NotARationalMap when the modular resultant vanishes.
RationalMap3 inverse_associated(const BinaryForm& f, const BinaryForm& g);

// Modular resultant Res(x g + df/dy, y g - df/dx) of a (V4, V2) pair.
Rat modular_resultant(const BinaryForm& f, const BinaryForm& g);

// Dehomogenized fixed-point polynomial S(t) = F(t) - t G(t); index i holds
// the t^i coefficient; degree <= 4 (may degenerate, returned as-is).
std::array<Rat, 5> fixed_point_form(const RationalMap3& phi);

}  // namespace ratcubic
