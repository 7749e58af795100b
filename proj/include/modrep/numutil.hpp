#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace modrep {

using i64 = std::int64_t;

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (i64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Least non-negative residue.
inline i64 mod_reduce(i64 a, i64 m) {
    i64 v = a % m;
    return v < 0 ? v + m : v;
}

inline i64 mod_mul(i64 a, i64 b, i64 m) { return mod_reduce(a * b, m); }

inline i64 mod_pow(i64 base, i64 exp, i64 m) {
    base = mod_reduce(base, m);
    i64 acc = 1 % m;
    while (exp > 0) {
        if (exp & 1) acc = mod_mul(acc, base, m);
        base = mod_mul(base, base, m);
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid; returns g = gcd(a,b) and x,y with a*x + b*y = g.
inline i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    i64 x1 = 0, y1 = 0;
    i64 g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline i64 mod_inverse(i64 a, i64 m) {
    i64 x = 0, y = 0;
    i64 g = ext_gcd(mod_reduce(a, m), m, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: argument not invertible");
    return mod_reduce(x, m);
}

// Quadratic character of Z/r via Euler's criterion (0 on multiples of r).
inline int legendre(i64 k, i64 r) {
    i64 v = mod_pow(k, (r - 1) / 2, r);
    if (v == 0) return 0;
    return v == 1 ? 1 : -1;
}

// Prime factors without multiplicity, by trial division.
inline std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Moebius function, for cyclotomic polynomial assembly.
inline int moebius(i64 n) {
    int parity = 0;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            ++parity;
        }
    }
    if (n > 1) ++parity;
    return (parity % 2 == 0) ? 1 : -1;
}

inline i64 euler_phi(i64 n) {
    i64 result = n;
    for (i64 p : prime_factors(n)) result = result / p * (p - 1);
    return result;
}

} // namespace modrep
