#pragma once

#include <vector>

#include "ratcubic/rational.hpp"

namespace ratcubic {

// Mobius transformation / GL2 matrix [[a,b],[c,e]] with nonzero determinant.
struct MobiusMap {
    Rat a, b, c, e;

    MobiusMap(Rat a_, Rat b_, Rat c_, Rat e_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), e(std::move(e_)) {
        if (det() == 0) throw std::invalid_argument("MobiusMap: singular matrix");
    }

    Rat det() const { return a * e - b * c; }

    MobiusMap inverse() const { return MobiusMap(e, -b, -c, a); }

    // Matrix product; act(f, compose(M, N)) == act(act(f, M), N).
    friend MobiusMap compose(const MobiusMap& m, const MobiusMap& n) {
        return MobiusMap(m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.e,
                         m.c * n.a + m.e * n.c, m.c * n.b + m.e * n.e);
    }
};

// Homogeneous binary form of fixed degree over Q.
// coeff(i) multiplies x^i * y^(degree-i). The zero form is representable.
class BinaryForm {
public:
    explicit BinaryForm(int degree) : coeffs_(degree + 1) {
        if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    }
    BinaryForm(int degree, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        if (degree < 0 || coeffs_.size() != static_cast<size_t>(degree) + 1)
            throw std::invalid_argument("BinaryForm: coefficient count != degree+1");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int i) const { return coeffs_.at(i); }
    void set_coeff(int i, Rat v) { coeffs_.at(i) = std::move(v); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    Rat evaluate(const Rat& x, const Rat& y) const;

    BinaryForm dx() const;  // partial d/dx, degree drops by one
    BinaryForm dy() const;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    BinaryForm& operator*=(const Rat& k);

    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(BinaryForm a, const Rat& k) { return a *= k; }
    friend BinaryForm operator*(const Rat& k, BinaryForm a) { return a *= k; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);  // product of forms
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

// r-th transvectant (f, g)_r with the classical factorial prefactor
// (m-r)!(n-r)!/(m! n!); exact, throws if r exceeds either degree.
BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r);

// f^M(x, y) = f(a x + b y, c x + e y).
BinaryForm act(const BinaryForm& f, const MobiusMap& m);

// Sylvester resultant of two nonzero forms (descending coefficient rows,
// f rows first). Res(x^3, y^3) = +1 under this convention.
Rat resultant(const BinaryForm& f, const BinaryForm& g);

// Conversion to/from the standard binomial-weighted coordinates a_i where
// f = sum_i C(d,i) a_i x^i y^(d-i); used only by the classical generator
// formulas for single binary forms.
std::vector<Rat> to_standard_coeffs(const BinaryForm& f);
BinaryForm from_standard_coeffs(const std::vector<Rat>& a);

}  // namespace ratcubic
