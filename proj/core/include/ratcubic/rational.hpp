#pragma once

#include <gmpxx.h>

#include <array>
#include <stdexcept>
#include <string>

namespace ratcubic {

using Int = mpz_class;
using Rat = mpq_class;

// Exact rationals serialize as "p" or "p/q", never as decimals.
inline std::string to_string(const Rat& r) {
    return r.get_str();
}

inline std::string to_string(const Int& n) {
    return n.get_str();
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned e) {
    Rat r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

// True iff q is a square in Q; optionally returns the nonnegative root.
bool is_rational_square(const Rat& q, Rat* root = nullptr);

// True iff q = r^n for rational r (sign handled for odd n); returns r.
bool is_rational_nth_power(const Rat& q, unsigned n, Rat* root = nullptr);

}  // namespace ratcubic
