#include "ratcubic/binary_form.hpp"

#include <algorithm>

namespace ratcubic {

bool is_rational_square(const Rat& q, Rat* root) {
    if (q < 0) return false;
    if (q == 0) {
        if (root) *root = 0;
        return true;
    }
    Int num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rat(rn, rd);
    }
    return true;
}

bool is_rational_nth_power(const Rat& q, unsigned n, Rat* root) {
    if (n == 0) throw std::invalid_argument("is_rational_nth_power: n = 0");
    if (q == 0) {
        if (root) *root = 0;
        return true;
    }
    if (q < 0 && n % 2 == 0) return false;
    Int num = abs(Int(q.get_num())), den = q.get_den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return false;
    if (root) {
        Rat r(rn, rd);
        *root = (q < 0) ? Rat(-r) : r;
    }
    return true;
}

Rat BinaryForm::evaluate(const Rat& x, const Rat& y) const {
    Rat acc = 0;
    const int d = degree();
    for (int i = 0; i <= d; ++i) {
        if (coeffs_[i] == 0) continue;
        acc += coeffs_[i] * pow_rat(x, i) * pow_rat(y, d - i);
    }
    return acc;
}

BinaryForm BinaryForm::dx() const {
    const int d = degree();
    if (d == 0) return BinaryForm(0);
    BinaryForm r(d - 1);
    for (int i = 0; i < d; ++i) r.set_coeff(i, coeffs_[i + 1] * (i + 1));
    return r;
}

BinaryForm BinaryForm::dy() const {
    const int d = degree();
    if (d == 0) return BinaryForm(0);
    BinaryForm r(d - 1);
    for (int i = 0; i < d; ++i) r.set_coeff(i, coeffs_[i] * (d - i));
    return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (o.degree() != degree()) throw std::invalid_argument("BinaryForm: degree mismatch in +");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
    if (o.degree() != degree()) throw std::invalid_argument("BinaryForm: degree mismatch in -");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator*=(const Rat& k) {
    for (auto& c : coeffs_) c *= k;
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm r(a.degree() + b.degree());
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) {
            if (b.coeff(j) == 0) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

namespace {

BinaryForm mixed_partial(const BinaryForm& f, int nx, int ny) {
    BinaryForm r = f;
    for (int i = 0; i < nx; ++i) r = r.dx();
    for (int i = 0; i < ny; ++i) r = r.dy();
    return r;
}

Rat binomial(int n, int k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

}  // namespace

BinaryForm transvectant(const BinaryForm& f, const BinaryForm& g, int r) {
    const int m = f.degree(), n = g.degree();
    if (r < 0 || r > m || r > n)
        throw std::invalid_argument("transvectant: order exceeds a degree");
    // (m-r)! (n-r)! / (m! n!) = 1 / prod_{k<r} (m-k)(n-k)
    Rat pre = 1;
    for (int k = 0; k < r; ++k) pre /= Rat((m - k)) * Rat((n - k));
    BinaryForm acc(m + n - 2 * r);
    for (int k = 0; k <= r; ++k) {
        BinaryForm t = mixed_partial(f, r - k, k) * mixed_partial(g, k, r - k);
        Rat s = binomial(r, k);
        if (k % 2) s = -s;
        acc += s * t;
    }
    return pre * acc;
}

BinaryForm act(const BinaryForm& f, const MobiusMap& m) {
    const int d = f.degree();
    // powers of (a x + b y) and (c x + e y)
    std::vector<BinaryForm> xp, yp;
    BinaryForm one(0);
    one.set_coeff(0, 1);
    xp.push_back(one);
    yp.push_back(one);
    BinaryForm lx(1), ly(1);
    lx.set_coeff(1, m.a);
    lx.set_coeff(0, m.b);
    ly.set_coeff(1, m.c);
    ly.set_coeff(0, m.e);
    for (int i = 1; i <= d; ++i) {
        xp.push_back(xp.back() * lx);
        yp.push_back(yp.back() * ly);
    }
    BinaryForm r(d);
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i) == 0) continue;
        r += f.coeff(i) * (xp[i] * yp[d - i]);
    }
    return r;
}

Rat resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant: zero form");
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    // Sylvester matrix, descending coefficient rows, f rows first.
    std::vector<std::vector<Rat>> a(N, std::vector<Rat>(N, Rat(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(n - j);
    Rat det = 1;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int i = col; i < N; ++i)
            if (a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rat inv = a[col][col];
        for (int i = col + 1; i < N; ++i) {
            if (a[i][col] == 0) continue;
            const Rat fac = a[i][col] / inv;
            for (int j = col; j < N; ++j) a[i][j] -= fac * a[col][j];
        }
    }
    return det;
}

std::vector<Rat> to_standard_coeffs(const BinaryForm& f) {
    const int d = f.degree();
    std::vector<Rat> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = f.coeff(i) / binomial(d, i);
    return a;
}

BinaryForm from_standard_coeffs(const std::vector<Rat>& a) {
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 0) throw std::invalid_argument("from_standard_coeffs: empty");
    BinaryForm f(d);
    for (int i = 0; i <= d; ++i) f.set_coeff(i, a[i] * binomial(d, i));
    return f;
}

}  // namespace ratcubic
