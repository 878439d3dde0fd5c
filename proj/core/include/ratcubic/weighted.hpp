#pragma once

#include <array>

#include "ratcubic/invariants.hpp"

namespace ratcubic {

// wgcd-reduced integer representative of a point of P(2,2,3,3,4,6).
struct WeightedPoint {
    static constexpr std::array<int, 6> weights{2, 2, 3, 3, 4, 6};
    std::array<Int, 6> coords{};
    friend bool operator==(const WeightedPoint& a, const WeightedPoint& b) = default;
};

// Scale by lambda^{w_i} for the unique positive rational lambda such that all
// entries are integers and no prime p has p^{w_i} | coords[i] for every i.
// Signs are preserved as computed. Throws std::domain_error on the zero tuple.
WeightedPoint normalize_weighted(const std::array<Rat, 6>& xi);
inline WeightedPoint normalize_weighted(const XiTuple& xi) { return normalize_weighted(xi.xi); }

// max_i |coords[i]|^(1/w_i); reporting only, exact logic never uses this.
double weighted_height(const WeightedPoint& p);
double weighted_height(const std::array<Rat, 6>& xi);

// Exact equality in P_w(Q): true iff some rational lambda != 0 satisfies
// b_i = lambda^{w_i} a_i for all i. Zero patterns must match exactly.
bool weighted_points_equal(const std::array<Rat, 6>& a, const std::array<Rat, 6>& b);
inline bool weighted_points_equal(const XiTuple& a, const XiTuple& b) {
    return weighted_points_equal(a.xi, b.xi);
}

}  // namespace ratcubic
