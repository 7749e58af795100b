#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "modrep/reppair.hpp"

namespace modrep {

/// Quadratic character of Z/r, built from a square table: chi(k) is +1 on
/// nonzero squares, -1 on non-squares, 0 at 0.
struct QuadChar {
    i64 r = 0;
    std::vector<int> values;

    explicit QuadChar(i64 r_) : r(r_), values(static_cast<std::size_t>(r_), -1) {
        if (!is_prime(r_) || r_ == 2)
            throw std::invalid_argument("QuadChar: r must be an odd prime");
        values[0] = 0;
        for (i64 k = 1; k < r; ++k) values[static_cast<std::size_t>(k * k % r)] = 1;
    }

    int operator()(i64 k) const { return values[static_cast<std::size_t>(mod_reduce(k, r))]; }
};

inline void require_odd_prime(i64 r) {
    if (!is_prime(r) || r == 2) throw std::invalid_argument("expected an odd prime");
}

/// S'_{ab} = chi(ab) (zeta^{2ab} - zeta^{-2ab}), T' = diag(zeta^{-a^2}),
/// indices 1..(r-1)/2.
inline RepPair build_psu2(i64 r, i64 field_order = 0) {
    require_odd_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    QuadChar chi(r);
    const i64 h = (r - 1) / 2;
    RepPair rep;
    rep.r = r;
    rep.dim = h;
    rep.field_order = m;
    rep.label = RepLabel::psu2;
    rep.S = CycMatrix(h, h, m);
    rep.T = CycMatrix(h, h, m);
    for (i64 a = 1; a <= h; ++a) {
        rep.basis_labels.push_back("e'_" + std::to_string(a));
        rep.T.at(a - 1, a - 1) = zeta_r_power(r, -a * a, m);
        for (i64 b = 1; b <= h; ++b) {
            int c = chi(a * b);
            CycNum entry = zeta_r_power(r, 2 * a * b, m) - zeta_r_power(r, -2 * a * b, m);
            if (c == -1) entry = -entry;
            rep.S.at(a - 1, b - 1) = entry;
        }
    }
    return rep;
}

/// The same representation in its customary normalization at xi = zeta^4:
/// S'_{ab} = xi^{2ab-a-b} - xi^{-2ab+a+b-1}, T' = diag(xi^{-a(a-1)}).
inline RepPair build_psu2_le_form(i64 r, i64 field_order = 0) {
    require_odd_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    const i64 h = (r - 1) / 2;
    RepPair rep;
    rep.r = r;
    rep.dim = h;
    rep.field_order = m;
    rep.label = RepLabel::psu2;
    rep.S = CycMatrix(h, h, m);
    rep.T = CycMatrix(h, h, m);
    for (i64 a = 1; a <= h; ++a) {
        rep.basis_labels.push_back("e'_" + std::to_string(a));
        rep.T.at(a - 1, a - 1) = zeta_r_power(r, -4 * a * (a - 1), m);
        for (i64 b = 1; b <= h; ++b)
            rep.S.at(a - 1, b - 1) = zeta_r_power(r, 4 * (2 * a * b - a - b), m) -
                                     zeta_r_power(r, 4 * (-2 * a * b + a + b - 1), m);
    }
    return rep;
}

/// Entrywise complex conjugate of a representation pair.
inline RepPair conjugate_rep(const RepPair& rep, RepLabel new_label) {
    RepPair out = rep;
    out.label = new_label;
    out.S = rep.S.conj();
    out.T = rep.T.conj();
    return out;
}

inline RepPair build_psu2_conjugated(i64 r, i64 field_order = 0) {
    return conjugate_rep(build_psu2(r, field_order), RepLabel::psu2_conjugated);
}

/// Signed permutation relating the two PSU(2) normalizations:
///   P S_le P^-1 = s_scalar * S  and  P T_le P^-1 = t_scalar * T,
/// with both scalars roots of unity. The closed form maps index a to the
/// representative of +-(2a-1) in 1..(r-1)/2 with sign chi(new index) times
/// the sign of the representative choice; a brute-force search over signed
/// permutations backs it up at small dimensions.
struct ReindexWitness {
    SignedPerm perm;
    CycNum s_scalar;
    CycNum t_scalar;
};

inline std::optional<ReindexWitness> reindex_witness(i64 r, i64 field_order = 0) {
    require_odd_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    RepPair le = build_psu2_le_form(r, m);
    RepPair target = build_psu2(r, m);
    const i64 h = (r - 1) / 2;

    auto try_perm = [&](const SignedPerm& p) -> std::optional<ReindexWitness> {
        CycMatrix pm = p.to_matrix(m);
        CycMatrix pinv = p.inverse().to_matrix(m);
        auto s_ratio = entrywise_ratio(pm * le.S * pinv, target.S);
        if (!s_ratio) return std::nullopt;
        auto t_ratio = entrywise_ratio(pm * le.T * pinv, target.T);
        if (!t_ratio) return std::nullopt;
        // Both scalars must be roots of unity: a single power of zeta.
        for (const CycNum* s : {&*s_ratio, &*t_ratio}) {
            CycNum can = s->compress().canonical();
            if (can.terms().size() != 1) return std::nullopt;
            const auto& [e, c] = *can.terms().begin();
            if (c != 1 && c != -1) return std::nullopt;
        }
        return ReindexWitness{p, *s_ratio, *t_ratio};
    };

    // Closed form: 2a-1 = eps_a * sigma(a) mod r with sigma(a) in 1..h.
    QuadChar chi(r);
    SignedPerm p = SignedPerm::identity(h);
    for (i64 a = 1; a <= h; ++a) {
        i64 t = mod_reduce(2 * a - 1, r);
        i64 sigma = t <= h ? t : r - t;
        int eps = t <= h ? 1 : -1;
        p.dest[static_cast<std::size_t>(a - 1)] = sigma - 1;
        p.sign[static_cast<std::size_t>(a - 1)] = eps * chi(sigma);
    }
    if (auto w = try_perm(p)) return w;

    // Fallback: exhaustive search at small dimension.
    if (h <= 6) {
        std::vector<i64> idx(static_cast<std::size_t>(h));
        for (i64 i = 0; i < h; ++i) idx[static_cast<std::size_t>(i)] = i;
        std::vector<i64> perm = idx;
        do {
            for (i64 mask = 0; mask < (i64{1} << h); ++mask) {
                SignedPerm q;
                q.dest = perm;
                q.sign.resize(static_cast<std::size_t>(h));
                for (i64 i = 0; i < h; ++i)
                    q.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
                if (auto w = try_perm(q)) return w;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
}

} // namespace modrep
