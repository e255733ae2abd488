#pragma once

// Exact integer helpers shared by every module. Nothing here uses floating point.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "christoffel/errors.hpp"

namespace christoffel {

using Int = std::int64_t;

/// Floor division; correct for negative numerators.
constexpr Int floor_div(Int num, Int den) {
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) {
        --q;
    }
    return q;
}

constexpr Int ceil_div(Int num, Int den) { return -floor_div(-num, den); }

/// Least nonnegative residue of v modulo n (n > 0).
constexpr Int mod(Int v, Int n) {
    Int r = v % n;
    return r < 0 ? r + n : r;
}

constexpr Int gcd(Int a, Int b) { return std::gcd(a, b); }
constexpr Int lcm(Int a, Int b) { return std::lcm(a, b); }
constexpr bool coprime(Int a, Int b) { return std::gcd(a, b) == 1; }

/// Bezout coefficients: u*a + v*b == g == gcd(a, b).
struct ExtendedGcd {
    Int g;
    Int u;
    Int v;
};

constexpr ExtendedGcd extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        const Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

/// Multiplicative inverse of a modulo n, in [0, n). Requires gcd(a, n) == 1.
inline Int mod_inverse(Int a, Int n) {
    if (n < 1) {
        throw precondition_error("modulus must be positive, got " + std::to_string(n));
    }
    if (n == 1) {
        return 0;
    }
    const auto eg = extended_gcd(mod(a, n), n);
    if (eg.g != 1) {
        throw precondition_error(std::to_string(a) + " is not invertible modulo " +
                                 std::to_string(n));
    }
    return mod(eg.u, n);
}

}  // namespace christoffel
