#include "ratcubic/invariants.hpp"

#include "invariant_tables.inc"

namespace ratcubic {

namespace {

Rat eval_terms(const detail::PolyTerm* terms, size_t n, long long den,
               const std::array<Rat, 8>& c) {
    Rat acc = 0;
    for (size_t t = 0; t < n; ++t) {
        Rat m = static_cast<long>(terms[t].coeff);
        for (int v = 0; v < 8; ++v)
            for (int e = 0; e < terms[t].exp[v]; ++e) m *= c[v];
        acc += m;
    }
    return acc / Rat(static_cast<long>(den));
}

template <size_t N>
Rat eval_table(const detail::PolyTerm (&terms)[N], long long den,
               const std::array<Rat, 8>& c) {
    return eval_terms(terms, N, den, c);
}

}  // namespace

XiTuple xi_explicit(const RationalMap3& phi) {
    const auto& c = phi.coeffs();
    XiTuple x;
    x[0] = eval_table(detail::xi0_terms, detail::xi0_den, c);
    x[1] = eval_table(detail::xi1_terms, detail::xi1_den, c);
    x[2] = eval_table(detail::xi2_terms, detail::xi2_den, c);
    x[3] = eval_table(detail::xi3_terms, detail::xi3_den, c);
    x[4] = eval_table(detail::xi4_terms, detail::xi4_den, c);
    x[5] = eval_table(detail::xi5_terms, detail::xi5_den, c);
    return x;
}

XiTuple xi_via_transvectants(const RationalMap3& phi) {
    const auto [I, J] = associated_pair(phi);
    const BinaryForm T = transvectant(I, I, 2);
    const BinaryForm J2 = J * J;
    const BinaryForm J3 = J2 * J;
    XiTuple x;
    x[0] = transvectant(J, J, 2).coeff(0);
    x[1] = transvectant(I, I, 4).coeff(0);
    x[2] = transvectant(T, I, 4).coeff(0);
    x[3] = transvectant(I, J2, 4).coeff(0);
    x[4] = transvectant(T, J2, 4).coeff(0);
    x[5] = transvectant(J3, transvectant(I, T, 1), 6).coeff(0);
    return x;
}

Rat i6_resultant(const RationalMap3& phi) {
    if (phi.numerator_zero() || phi.denominator_zero())
        throw NotARationalMap("i6_resultant: zero block");
    return resultant(phi.numerator(), phi.denominator());
}

Rat i6_from_xi(const XiTuple& x) {
    // Sylvester-normalized: the negative of the published expression.
    return Rat(1, 8) * x[5] + Rat(1, 256) * x[3] * x[3] -
           Rat(3, 16) * x[2] * x[3] - Rat(3, 4) * x[2] * x[2] +
           Rat(3, 16) * x[1] * x[4] + Rat(1, 8) * x[1] * x[1] * x[1] -
           Rat(1, 64) * x[0] * x[4] + Rat(1, 384) * x[0] * x[0] * x[1];
}

Rat j6_resultant(const RationalMap3& phi) {
    const auto [I, J] = associated_pair(phi);
    if (I.is_zero() || J.is_zero()) return Rat(0);
    return resultant(I, J);
}

Rat j6_explicit(const RationalMap3& phi) {
    // Expanded determinant table in the database coefficient order. The
    // journal prints this expansion in the reversed order; the generated
    // table already accounts for that.
    return eval_table(detail::j6_terms, detail::j6_den, phi.coeffs());
}

Rat j6_from_xi(const XiTuple& x) {
    return x[3] * x[3] - 4 * x[0] * x[4] + Rat(2, 3) * x[0] * x[0] * x[1];
}

namespace {

Rat syzygy_rhs(const XiTuple& x, const Rat& c_x0_x2) {
    const Rat &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3], &x4 = x[4];
    return Rat(1, 108) * x0 * x0 * x0 * x1 * x1 * x1 - c_x0_x2 * x0 * x0 * x0 * x2 * x2 -
           Rat(1, 24) * x0 * x1 * x1 * x3 * x3 - Rat(1, 6) * x2 * x3 * x3 * x3 +
           Rat(1, 2) * x0 * x2 * x3 * x4 + Rat(1, 4) * x1 * x3 * x3 * x4 -
           Rat(1, 4) * x0 * x1 * x4 * x4 - Rat(1, 2) * x4 * x4 * x4;
}

}  // namespace

Rat syzygy_residual(const XiTuple& x) {
    return x[5] * x[5] - syzygy_rhs(x, Rat(1, 18));
}

Rat syzygy_residual_printed(const XiTuple& x) {
    return x[5] * x[5] - syzygy_rhs(x, Rat(18));
}

AbsoluteInvariants absolute_invariants(const XiTuple& x, const Rat& i6) {
    if (i6 == 0) throw std::domain_error("absolute_invariants: I6 = 0");
    const Rat i6sq = i6 * i6;
    AbsoluteInvariants a;
    a.i[0] = pow_rat(x[0], 6) / i6sq;
    a.i[1] = pow_rat(x[1], 6) / i6sq;
    a.i[2] = pow_rat(x[2], 4) / i6sq;
    a.i[3] = pow_rat(x[3], 4) / i6sq;
    a.i[4] = pow_rat(x[4], 3) / i6sq;
    return a;
}

}  // namespace ratcubic
