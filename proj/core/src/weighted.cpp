#include "ratcubic/weighted.hpp"

#include <cmath>
#include <map>
#include <numeric>

namespace ratcubic {

namespace {

// Trial division + Pollard rho; the inputs here are contents/denominators of
// invariant vectors, small in practice but not guaranteed smooth.
void factor_into(Int n, std::map<Int, long>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++out[Int(p)];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        if (n == 1) return;
    }
    Int p = 17;
    while (p * p <= n && p < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        }
        p += 2;
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    // Pollard rho (Brent variant)
    Int d = n;
    unsigned long c = 1;
    while (d == n) {
        Int x = 2, y = 2, diff, g = 1;
        while (g == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != 1 && g != n) {
            d = g;
            break;
        }
        ++c;
    }
    factor_into(d, out);
    factor_into(n / d, out);
}

long valuation(const Int& n, const Int& p) {
    if (n == 0) return 0;
    Int m = abs(n);
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long floordiv(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

WeightedPoint normalize_weighted(const std::array<Rat, 6>& xi) {
    bool any = false;
    for (const auto& v : xi) any = any || v != 0;
    if (!any) throw std::domain_error("normalize_weighted: zero tuple");

    // candidate primes: divisors of denominators and of the common content
    std::map<Int, long> primes;
    Int content = 0;
    for (const auto& v : xi) {
        if (v == 0) continue;
        factor_into(Int(v.get_den()), primes);
        Int num = abs(Int(v.get_num()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    factor_into(content, primes);

    // lambda = prod p^{e_p}, e_p = -min_i floor(v_p(xi_i) / w_i)
    Rat lambda = 1;
    for (const auto& [p, unused] : primes) {
        (void)unused;
        long e = 0;
        bool first = true;
        for (int i = 0; i < 6; ++i) {
            if (xi[i] == 0) continue;
            const long v = valuation(Int(xi[i].get_num()), p) - valuation(Int(xi[i].get_den()), p);
            const long q = floordiv(v, WeightedPoint::weights[i]);
            e = first ? q : std::min(e, q);
            first = false;
        }
        // scale by p^{-e} per unit weight
        Rat pw(p);
        for (long k = 0; k < std::labs(e); ++k) lambda *= (e > 0) ? Rat(1) / pw : pw;
    }

    WeightedPoint out;
    for (int i = 0; i < 6; ++i) {
        Rat scaled = xi[i] * pow_rat(lambda, WeightedPoint::weights[i]);
        if (scaled.get_den() != 1)
            throw std::logic_error("normalize_weighted: non-integral result");
        out.coords[i] = scaled.get_num();
    }
    return out;
}

double weighted_height(const WeightedPoint& p) {
    double h = 0;
    for (int i = 0; i < 6; ++i) {
        if (p.coords[i] == 0) continue;
        const double v = std::abs(p.coords[i].get_d());
        h = std::max(h, std::pow(v, 1.0 / WeightedPoint::weights[i]));
    }
    return h;
}

double weighted_height(const std::array<Rat, 6>& xi) {
    double h = 0;
    for (int i = 0; i < 6; ++i) {
        if (xi[i] == 0) continue;
        const double v = std::abs(xi[i].get_d());
        h = std::max(h, std::pow(v, 1.0 / WeightedPoint::weights[i]));
    }
    return h;
}

bool weighted_points_equal(const std::array<Rat, 6>& a, const std::array<Rat, 6>& b) {
    bool a_any = false, b_any = false;
    for (int i = 0; i < 6; ++i) {
        a_any = a_any || a[i] != 0;
        b_any = b_any || b[i] != 0;
        if ((a[i] == 0) != (b[i] == 0)) return false;  // lambda^w never maps 0 <-> nonzero
    }
    if (!a_any || !b_any) return a_any == b_any;

    // Constraints lambda^{w_i} = b_i / a_i over nonzero slots. Combine them
    // into a single lambda^g = value with g = gcd of the weights present,
    // solve the rational g-th root, then verify every slot.
    const auto powsigned = [](const Rat& base, long e) {
        Rat r = 1;
        if (e >= 0) {
            for (long k = 0; k < e; ++k) r *= base;
        } else {
            const Rat inv = Rat(1) / base;
            for (long k = 0; k < -e; ++k) r *= inv;
        }
        return r;
    };
    const auto ext_gcd = [](long x, long y, long& u, long& v) {
        long r0 = x, r1 = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            const long q = r0 / r1;
            long tmp;
            tmp = r0 - q * r1; r0 = r1; r1 = tmp;
            tmp = s0 - q * s1; s0 = s1; s1 = tmp;
            tmp = t0 - q * t1; t0 = t1; t1 = tmp;
        }
        if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
        u = s0;
        v = t0;
        return r0;
    };

    long g = 0;
    Rat lg = 1;  // lambda^g
    for (int i = 0; i < 6; ++i) {
        if (a[i] == 0) continue;
        const long w = WeightedPoint::weights[i];
        const Rat r = b[i] / a[i];
        if (g == 0) {
            g = w;
            lg = r;
        } else {
            long u, v;
            const long ng = ext_gcd(g, w, u, v);
            lg = powsigned(lg, u) * powsigned(r, v);
            g = ng;
        }
    }
    Rat lambda;
    if (!is_rational_nth_power(lg, unsigned(g), &lambda)) return false;
    for (const Rat& cand : {lambda, Rat(-lambda)}) {
        if (cand == 0) continue;
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i) {
            if (a[i] == 0) continue;
            ok = (pow_rat(cand, WeightedPoint::weights[i]) == b[i] / a[i]);
        }
        if (ok) return true;
        if (g % 2 != 0) break;  // odd g: the root is unique
    }
    return false;
}

}  // namespace ratcubic
