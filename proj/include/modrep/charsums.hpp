#pragma once

#include <optional>
#include <vector>

#include "modrep/eisenstein.hpp"
#include "modrep/psu2.hpp"

namespace modrep {

/// Character-sum identities over Z/r. Every check returns both sides so a
/// failure is diagnosable, with exact equality as the verdict.

struct CycIdentity {
    CycNum lhs;
    CycNum rhs;
    bool equal = false;
};

struct IntIdentity {
    i64 lhs = 0;
    i64 rhs = 0;
    bool equal = false;
};

/// sum_{k=1}^{r-1} chi(k) zeta^{lk}  vs  gauss_sqrt(r) * chi(l).
inline CycIdentity gauss_identity(i64 r, i64 l) {
    require_odd_prime(r);
    QuadChar chi(r);
    CycNum lhs(r);
    for (i64 k = 1; k < r; ++k) lhs.add_term(mod_mul(l, k, r), chi(k));
    CycNum rhs = gauss_sqrt(r) * Rational(chi(l));
    return {lhs, rhs, lhs == rhs};
}

/// Exact value of sum_{i=0}^{r-1} chi(a i^2 + b i + c), with the closed form
/// (-chi(a) off the degenerate discriminant, (r-1) chi(a) on it) evaluated
/// alongside whenever a != 0.
struct Degree2Sum {
    i64 value = 0;
    std::optional<i64> closed_form;
    bool matches = true;
};

inline Degree2Sum degree2_sum(i64 r, i64 a, i64 b, i64 c) {
    require_odd_prime(r);
    QuadChar chi(r);
    Degree2Sum out;
    for (i64 i = 0; i < r; ++i) out.value += chi(a * i % r * i + b * i + c);
    if (mod_reduce(a, r) != 0) {
        i64 disc = mod_reduce(b * b - 4 * a * c, r);
        out.closed_form = (disc != 0) ? -chi(a) : (r - 1) * chi(a);
        out.matches = (out.value == *out.closed_form);
    }
    return out;
}

inline i64 poly_eval_mod(const std::vector<i64>& coeffs, i64 x, i64 r) {
    i64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mod_reduce(acc * x + *it, r);
    return acc;
}

/// sum_{x=1}^{r-1} chi(f(x^2)) - sum chi(f(x))  vs  sum chi(x f(x)).
inline IntIdentity square_identity(i64 r, const std::vector<i64>& f) {
    require_odd_prime(r);
    QuadChar chi(r);
    IntIdentity out;
    for (i64 x = 1; x < r; ++x) {
        out.lhs += chi(poly_eval_mod(f, x * x % r, r)) - chi(poly_eval_mod(f, x, r));
        out.rhs += chi(mod_mul(x, poly_eval_mod(f, x, r), r));
    }
    out.equal = (out.lhs == out.rhs);
    return out;
}

/// sum_x chi(x) chi(x^2 + a x + b)  vs  sum_x chi(x + a) chi(x^2 - 4b).
inline IntIdentity jacobsthal_identity(i64 r, i64 a, i64 b) {
    require_odd_prime(r);
    QuadChar chi(r);
    IntIdentity out;
    for (i64 x = 0; x < r; ++x) {
        out.lhs += chi(x) * chi(x * x + a * x + b);
        out.rhs += chi(x + a) * chi(x * x - 4 * b);
    }
    out.equal = (out.lhs == out.rhs);
    return out;
}

/// The alternating trace sum s = sum_{j=0}^{r} (-1)^j zeta^{Tr(u^j)} in both
/// forms: directly over the u-orbit, and as the closed quadratic-exponent
/// expression (branching on r mod 4).
inline CycIdentity s_value(i64 r) {
    require_supported_prime(r);
    SymmetryData sd = build_symmetry_data(r);
    CycNum direct(r);
    for (i64 j = 0; j <= r; ++j)
        direct.add_term(sd.trace_u[static_cast<std::size_t>(j)], (j % 2 == 0) ? 1 : -1);

    CycNum sum_inv(r);   // sum_a zeta^{3/(a^2+a+1)}
    CycNum sum_sq(r);    // sum_a zeta^{3((2a+1)/(a^2+a+1))^2}
    for (i64 a = 1; a < r; ++a) {
        i64 q = mod_inverse(a * a + a + 1, r);
        sum_inv.add_term(3 * q, 1);
        i64 w = mod_mul(2 * a + 1, q, r);
        sum_sq.add_term(3 * w % r * w, 1);
    }
    CycNum prefix = root_power(r, -2);
    CycNum closed =
        (r % 4 == 1) ? prefix * (sum_inv - sum_sq) : prefix * (sum_sq - sum_inv);
    return {direct, closed, direct == closed};
}

/// sum_a chi(alpha_{ija}) vs sum_a chi(beta_{ija}) over a = 0..r-1, with
/// alpha = 2(j-i) + 3i/(a^2+a+1) and beta = 2(j-i) + 3i((2a+1)/(a^2+a+1))^2.
/// Defined for off-diagonal index pairs only.
inline IntIdentity alpha_beta_identity(i64 r, i64 i, i64 j) {
    require_supported_prime(r);
    const i64 h = (r - 1) / 2;
    if (i < 1 || i > h || j < 1 || j > h)
        throw std::invalid_argument("alpha_beta_identity: indices must lie in 1..(r-1)/2");
    if (i == j) throw std::invalid_argument("alpha_beta_identity: indices must differ");
    QuadChar chi(r);
    IntIdentity out;
    for (i64 a = 0; a < r; ++a) {
        i64 q = mod_inverse(a * a + a + 1, r);
        i64 alpha = mod_reduce(2 * (j - i) + 3 * i % r * q, r);
        i64 w = mod_mul(2 * a + 1, q, r);
        i64 beta = mod_reduce(2 * (j - i) + 3 * i % r * w % r * w, r);
        out.lhs += chi(alpha);
        out.rhs += chi(beta);
    }
    out.equal = (out.lhs == out.rhs);
    return out;
}

} // namespace modrep
