#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "modrep/numutil.hpp"

namespace modrep {

/// Residue a + b*omega in R_r = Z[omega]/r, omega a primitive cube root of
/// unity (omega^2 = -1 - omega). For primes r = 2 mod 3 this ring is a field
/// with r^2 elements. Elements are always written on the a + b*omega
/// convention; conj(a + b*omega) = (a - b) - b*omega.
struct EisElem {
    i64 r = 0;
    i64 a = 0;
    i64 b = 0;

    EisElem() = default;
    EisElem(i64 r_, i64 a_, i64 b_) : r(r_), a(mod_reduce(a_, r_)), b(mod_reduce(b_, r_)) {
        if (r_ < 2) throw std::invalid_argument("EisElem: modulus must be >= 2");
    }

    static EisElem zero(i64 r) { return {r, 0, 0}; }
    static EisElem one(i64 r) { return {r, 1, 0}; }
    static EisElem omega(i64 r) { return {r, 0, 1}; }

    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const EisElem& x, const EisElem& y) {
        return x.r == y.r && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const EisElem& x, const EisElem& y) { return !(x == y); }
    friend bool operator<(const EisElem& x, const EisElem& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    }

    friend EisElem operator+(const EisElem& x, const EisElem& y) {
        return {x.r, x.a + y.a, x.b + y.b};
    }
    friend EisElem operator-(const EisElem& x, const EisElem& y) {
        return {x.r, x.a - y.a, x.b - y.b};
    }
    EisElem operator-() const { return {r, -a, -b}; }

    // (a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd)*w, using w^2 = -1 - w.
    friend EisElem operator*(const EisElem& x, const EisElem& y) {
        i64 ac = mod_mul(x.a, y.a, x.r);
        i64 bd = mod_mul(x.b, y.b, x.r);
        i64 ad = mod_mul(x.a, y.b, x.r);
        i64 bc = mod_mul(x.b, y.a, x.r);
        return {x.r, ac - bd, ad + bc - bd};
    }

    EisElem conj() const { return {r, a - b, -b}; }

    i64 norm() const { return mod_reduce(a * a - a * b + b * b, r); }

    i64 trace() const { return mod_reduce(2 * a - b, r); }

    EisElem pow(i64 k) const {
        if (k < 0) return inverse().pow(-k);
        EisElem acc = one(r), base = *this;
        while (k > 0) {
            if (k & 1) acc = acc * base;
            base = base * base;
            k >>= 1;
        }
        return acc;
    }

    EisElem inverse() const {
        i64 n = norm();
        if (n == 0) throw std::domain_error("EisElem::inverse: zero or non-invertible element");
        i64 ninv = mod_inverse(n, r);
        EisElem c = conj();
        return {r, mod_mul(c.a, ninv, r), mod_mul(c.b, ninv, r)};
    }
};

inline i64 eis_norm(const EisElem& z) { return z.norm(); }
inline i64 eis_trace(const EisElem& z) { return z.trace(); }
inline EisElem eis_conj(const EisElem& z) { return z.conj(); }

/// The six Weyl images of z with their signs, in the fixed order
/// (z,+), (w z,+), (w^2 z,+), (-conj z,-), (-w conj z,-), (-w^2 conj z,-).
inline std::array<std::pair<EisElem, int>, 6> weyl_orbit(const EisElem& z) {
    EisElem w = EisElem::omega(z.r);
    EisElem w2 = w * w;
    EisElem zc = z.conj();
    return {{{z, 1},
             {w * z, 1},
             {w2 * z, 1},
             {-zc, -1},
             {-(w * zc), -1},
             {-(w2 * zc), -1}}};
}

inline void require_supported_prime(i64 r) {
    if (!is_prime(r) || r % 3 != 2 || r < 5)
        throw std::invalid_argument(
            "expected a prime r >= 5 with r = 2 mod 3 (split case not supported)");
}

inline i64 element_order(const EisElem& z, i64 group_order) {
    for (i64 d = 1; d <= group_order; ++d)
        if (group_order % d == 0 && z.pow(d) == EisElem::one(z.r)) return d;
    throw std::logic_error("element_order: order not found");
}

/// Distinguished data for R_r: a generator u of the norm-one subgroup with
/// u^(2n) = omega, u^(3n) = -1 (r = 6n - 1), the element rho used to index
/// the non-square-norm orbits, and a primitive root of R_r*.
struct SymmetryData {
    i64 r = 0;
    i64 n = 0;
    EisElem u;
    EisElem rho;
    EisElem primitive_root;
    std::vector<EisElem> u_powers; // u^0 .. u^r (r+1 entries, the full cycle)
    std::vector<i64> trace_u;      // trace(u^j) for j = 0 .. r

    i64 rho_norm() const { return rho.norm(); }
};

inline SymmetryData build_symmetry_data(i64 r) {
    require_supported_prime(r);
    SymmetryData sd;
    sd.r = r;
    sd.n = (r + 1) / 6;

    const i64 group_order = r * r - 1;
    const auto factors = prime_factors(group_order);

    auto is_primitive = [&](const EisElem& z) {
        if (z.is_zero()) return false;
        for (i64 p : factors)
            if (z.pow(group_order / p) == EisElem::one(r)) return false;
        return true;
    };

    // Lexicographically first primitive root of R_r*.
    EisElem x = EisElem::one(r);
    bool found = false;
    for (i64 a = 0; a < r && !found; ++a)
        for (i64 b = 0; b < r && !found; ++b) {
            EisElem cand(r, a, b);
            if (is_primitive(cand)) {
                x = cand;
                found = true;
            }
        }
    if (!found) throw std::logic_error("build_symmetry_data: no primitive root found");
    sd.primitive_root = x;

    EisElem u = x.pow(r - 1);
    const EisElem omega = EisElem::omega(r);
    if (u.pow(2 * sd.n) == omega * omega) u = u.inverse();
    if (u.norm() != 1 || element_order(u, r + 1) != r + 1 || u.pow(2 * sd.n) != omega ||
        u.pow(3 * sd.n) != -EisElem::one(r))
        throw std::logic_error("build_symmetry_data: generator of the norm-one subgroup failed its checks");
    sd.u = u;

    if (r % 4 == 1) {
        // rho = omega - conj(omega) = 1 + 2*omega; both 3 = N(rho) and
        // -3 = rho^2 are non-squares mod r in this class.
        sd.rho = EisElem(r, 1, 2);
        if (legendre(sd.rho.norm(), r) != -1)
            throw std::logic_error("build_symmetry_data: N(rho) unexpectedly a square");
        if (legendre(mod_reduce(-3, r), r) != -1 || legendre(3, r) != -1)
            throw std::logic_error("build_symmetry_data: quadratic class of 3 violated");
    } else {
        // r = 3 mod 4: take the lexicographically smallest rho with
        // N(rho) = -1 and conj(rho) = u * rho.
        if (legendre(mod_reduce(-1, r), r) != -1)
            throw std::logic_error("build_symmetry_data: -1 unexpectedly a square");
        bool have_rho = false;
        for (i64 a = 0; a < r && !have_rho; ++a)
            for (i64 b = 0; b < r && !have_rho; ++b) {
                EisElem cand(r, a, b);
                if (cand.norm() != mod_reduce(-1, r)) continue;
                if (cand.conj() == u * cand) {
                    sd.rho = cand;
                    have_rho = true;
                }
            }
        if (!have_rho)
            throw std::logic_error(
                "build_symmetry_data: no rho with N(rho) = -1 and conj(rho) = u*rho exists");
    }
    if (legendre(sd.rho.norm(), r) != -1)
        throw std::logic_error("build_symmetry_data: N(rho) must be a non-square");

    sd.u_powers.reserve(r + 1);
    sd.trace_u.reserve(r + 1);
    EisElem p = EisElem::one(r);
    for (i64 j = 0; j <= r; ++j) {
        sd.u_powers.push_back(p);
        sd.trace_u.push_back(p.trace());
        p = p * u;
    }
    if (p != EisElem::one(r))
        throw std::logic_error("build_symmetry_data: u does not have order r + 1");
    return sd;
}

/// All elements with norm 1 (the subgroup U of order r + 1).
inline std::vector<EisElem> norm_one_elements(i64 r) {
    std::vector<EisElem> out;
    for (i64 a = 0; a < r; ++a)
        for (i64 b = 0; b < r; ++b) {
            EisElem z(r, a, b);
            if (!z.is_zero() && z.norm() == 1) out.push_back(z);
        }
    return out;
}

} // namespace modrep
