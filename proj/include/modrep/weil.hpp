#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modrep/eisenstein.hpp"
#include "modrep/reppair.hpp"

namespace modrep {

/// Standard basis order for the r^2-dimensional space of functions on R_r:
/// z = a + b*omega at flat index a*r + b ((a,b) lexicographic).
inline i64 eis_index(const EisElem& z) { return z.a * z.r + z.b; }

inline EisElem eis_from_index(i64 r, i64 idx) { return EisElem(r, idx / r, idx % r); }

inline std::string eis_label(const EisElem& z) {
    return "e_(" + std::to_string(z.a) + "," + std::to_string(z.b) + ")";
}

/// The r^2-dimensional pair with S_{xy} = zeta^{Tr(conj(x) y)} and
/// T = diag(zeta^{-N(x)}).
inline RepPair build_unfolded(i64 r, i64 field_order = 0) {
    require_supported_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    RepPair rep;
    rep.r = r;
    rep.dim = r * r;
    rep.field_order = m;
    rep.label = RepLabel::unfolded;
    rep.S = CycMatrix(rep.dim, rep.dim, m);
    rep.T = CycMatrix(rep.dim, rep.dim, m);
    rep.basis_labels.reserve(static_cast<std::size_t>(rep.dim));
    for (i64 xi = 0; xi < rep.dim; ++xi) {
        EisElem x = eis_from_index(r, xi);
        rep.basis_labels.push_back(eis_label(x));
        rep.T.at(xi, xi) = zeta_r_power(r, -x.norm(), m);
        EisElem xc = x.conj();
        for (i64 yi = 0; yi < rep.dim; ++yi) {
            EisElem y = eis_from_index(r, yi);
            rep.S.at(xi, yi) = zeta_r_power(r, (xc * y).trace(), m);
        }
    }
    return rep;
}

enum class SymmetryKind { unit_u, weyl, charge_conj };

/// Signed permutation of the standard basis realizing one symmetry of the
/// unfolded representation: u(e_z) = -e_{uz}, w(e_z) = sgn(w) e_{w(z)}, or
/// charge conjugation e_z -> e_{-z}.
inline SignedPerm symmetry_operator(const SymmetryData& sd, SymmetryKind kind,
                                    int weyl_index = 0) {
    const i64 r = sd.r;
    const i64 dim = r * r;
    SignedPerm p = SignedPerm::identity(dim);
    for (i64 idx = 0; idx < dim; ++idx) {
        EisElem z = eis_from_index(r, idx);
        EisElem image(r, 0, 0);
        int sign = 1;
        switch (kind) {
            case SymmetryKind::unit_u:
                image = sd.u * z;
                sign = -1;
                break;
            case SymmetryKind::weyl: {
                if (weyl_index < 0 || weyl_index > 5)
                    throw std::invalid_argument("symmetry_operator: weyl index must be 0..5");
                auto orbit = weyl_orbit(z);
                image = orbit[static_cast<std::size_t>(weyl_index)].first;
                sign = orbit[static_cast<std::size_t>(weyl_index)].second;
                break;
            }
            case SymmetryKind::charge_conj:
                image = -z;
                sign = 1;
                break;
        }
        p.dest[static_cast<std::size_t>(idx)] = eis_index(image);
        p.sign[static_cast<std::size_t>(idx)] = sign;
    }
    return p;
}

enum class OrbitKind { plus, minus, plus_o, minus_o, plus_e, minus_e };

inline std::string to_string(OrbitKind k) {
    switch (k) {
        case OrbitKind::plus: return "plus";
        case OrbitKind::minus: return "minus";
        case OrbitKind::plus_o: return "plus_o";
        case OrbitKind::minus_o: return "minus_o";
        case OrbitKind::plus_e: return "plus_e";
        case OrbitKind::minus_e: return "minus_e";
    }
    throw std::logic_error("unknown OrbitKind");
}

/// Sparse signed-indicator vector over the standard basis {e_z}: flat index
/// -> coefficient in {+1, -1}.
using SparseSignedVec = std::map<i64, i64>;

/// Orbit-sum vectors expressing the symmetric bases of the unfolded space.
/// Vectors are raw signed sums (no orbit-size normalization); sums that
/// cancel to zero exactly are detected and excluded.
struct OrbitBasis {
    i64 r = 0;
    OrbitKind kind = OrbitKind::plus;
    std::vector<SparseSignedVec> vectors;
    std::vector<std::string> index_labels;
};

namespace detail {

inline void accumulate(SparseSignedVec& v, i64 idx, i64 coeff) {
    auto [it, inserted] = v.try_emplace(idx, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) v.erase(it);
    }
}

// Signed U-orbit sum starting at z0: sum_j (-1)^j e_{u^j z0}.
inline SparseSignedVec u_orbit_sum(const SymmetryData& sd, const EisElem& z0) {
    SparseSignedVec v;
    for (i64 j = 0; j <= sd.r; ++j)
        accumulate(v, eis_index(sd.u_powers[static_cast<std::size_t>(j)] * z0),
                   (j % 2 == 0) ? 1 : -1);
    return v;
}

// Signed Weyl orbit sum: sum_w sgn(w) e_{w(z0)}.
inline SparseSignedVec weyl_orbit_sum(const EisElem& z0) {
    SparseSignedVec v;
    for (const auto& [image, sign] : weyl_orbit(z0)) accumulate(v, eis_index(image), sign);
    return v;
}

} // namespace detail

/// Orbit bases of the unfolded space. plus / minus are the signed U-orbit
/// sums e+_a, e-_a for 1 <= a <= (r-1)/2. The o-variants (r = 1 mod 4) and
/// e-variants (r = 3 mod 4) are Weyl orbit sums indexed by j = 0..n-1; the
/// j index is n-periodic where applicable, so this window covers every
/// distinct vector, with exact-zero sums dropped.
inline OrbitBasis orbit_basis(const SymmetryData& sd, OrbitKind kind) {
    const i64 r = sd.r;
    const i64 h = (r - 1) / 2;
    const i64 n = sd.n;
    OrbitBasis basis;
    basis.r = r;
    basis.kind = kind;

    const bool odd_class = (r % 4 == 1);
    if ((kind == OrbitKind::plus_o || kind == OrbitKind::minus_o) && !odd_class)
        throw std::invalid_argument("orbit_basis: o-variants require r = 1 mod 4");
    if ((kind == OrbitKind::plus_e || kind == OrbitKind::minus_e) && odd_class)
        throw std::invalid_argument("orbit_basis: e-variants require r = 3 mod 4");

    for (i64 a = 1; a <= h; ++a) {
        EisElem za(r, a, 0);
        switch (kind) {
            case OrbitKind::plus: {
                basis.vectors.push_back(detail::u_orbit_sum(sd, za));
                basis.index_labels.push_back("(" + std::to_string(a) + ")");
                break;
            }
            case OrbitKind::minus: {
                basis.vectors.push_back(detail::u_orbit_sum(sd, za * sd.rho));
                basis.index_labels.push_back("(" + std::to_string(a) + ")");
                break;
            }
            case OrbitKind::plus_o:
            case OrbitKind::minus_o:
            case OrbitKind::plus_e:
            case OrbitKind::minus_e: {
                for (i64 j = 0; j < n; ++j) {
                    EisElem seed(r, 0, 0);
                    if (kind == OrbitKind::plus_o)
                        seed = za * sd.u_powers[static_cast<std::size_t>(2 * j)];
                    else if (kind == OrbitKind::minus_o)
                        seed = za * sd.rho * sd.u_powers[static_cast<std::size_t>(j)];
                    else if (kind == OrbitKind::plus_e)
                        seed = za * sd.u.pow(n / 2 + j);
                    else
                        seed = za * sd.rho * sd.u_powers[static_cast<std::size_t>(2 * j)];
                    SparseSignedVec v = detail::weyl_orbit_sum(seed);
                    if (v.empty()) continue; // exact cancellation
                    basis.vectors.push_back(std::move(v));
                    basis.index_labels.push_back("(" + std::to_string(a) + "," +
                                                 std::to_string(j) + ")");
                }
                break;
            }
        }
    }
    return basis;
}

/// The (r-1)/2-dimensional restricted pair on the invariant subspace cut out
/// by the U-orbit sums (e+ basis for r = 1 mod 4, e- basis for r = 3 mod 4):
///   r = 1 mod 4:  S_ab = sum_j (-1)^j zeta^{+ab Tr(u^j)},  T = diag zeta^{-a^2}
///   r = 3 mod 4:  S_ab = sum_j (-1)^j zeta^{-ab Tr(u^j)},  T = diag zeta^{+a^2}
inline RepPair build_restricted(i64 r, i64 field_order = 0) {
    require_supported_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    SymmetryData sd = build_symmetry_data(r);
    const i64 h = (r - 1) / 2;
    const bool odd_class = (r % 4 == 1);

    RepPair rep;
    rep.r = r;
    rep.dim = h;
    rep.field_order = m;
    rep.label = RepLabel::psu3_restricted;
    rep.S = CycMatrix(h, h, m);
    rep.T = CycMatrix(h, h, m);
    rep.basis_labels.reserve(static_cast<std::size_t>(h));
    for (i64 a = 1; a <= h; ++a) {
        rep.basis_labels.push_back((odd_class ? "e+_" : "e-_") + std::to_string(a));
        rep.T.at(a - 1, a - 1) = zeta_r_power(r, odd_class ? -a * a : a * a, m);
        for (i64 b = 1; b <= h; ++b) {
            CycNum entry(m);
            for (i64 j = 0; j <= r; ++j) {
                i64 e = a * b % r * sd.trace_u[static_cast<std::size_t>(j)];
                if (!odd_class) e = -e;
                CycNum term = zeta_r_power(r, e, m);
                if (j % 2 == 0)
                    entry += term;
                else
                    entry -= term;
            }
            rep.S.at(a - 1, b - 1) = entry;
        }
    }
    return rep;
}

/// Result of validating the restricted pair against the unfolded action:
/// expand S_hat * e^{s}_a exactly, project back on the orbit basis, and
/// compare the projected matrix with the closed form.
struct CrosscheckResult {
    bool leak_zero = false;        // no residual outside the orbit spans
    bool opposite_sign_zero = false; // no component on the opposite-sign basis
    bool t_eigen_ok = false;       // T_hat acts on e^s_a by the expected phase
    std::optional<CycNum> ratio;   // projected S = ratio * closed-form S
    CycMatrix projected;           // coefficients of S_hat e^s_a on the basis
};

inline CrosscheckResult restriction_crosscheck(i64 r, i64 field_order = 0) {
    require_supported_prime(r);
    const i64 m = resolve_field_order(r, field_order);
    SymmetryData sd = build_symmetry_data(r);
    RepPair unfolded = build_unfolded(r, m);
    RepPair restricted = build_restricted(r, m);
    const i64 h = (r - 1) / 2;
    const bool odd_class = (r % 4 == 1);

    OrbitBasis same = orbit_basis(sd, odd_class ? OrbitKind::plus : OrbitKind::minus);
    OrbitBasis other = orbit_basis(sd, odd_class ? OrbitKind::minus : OrbitKind::plus);

    // The U-orbit supports partition the nonzero elements by norm class, so
    // each coefficient can be read off at the orbit seed (coefficient +1).
    CrosscheckResult res;
    res.leak_zero = true;
    res.opposite_sign_zero = true;
    res.t_eigen_ok = true;
    res.projected = CycMatrix(h, h, m);

    for (i64 acol = 1; acol <= h; ++acol) {
        const SparseSignedVec& v = same.vectors[static_cast<std::size_t>(acol - 1)];

        // w = S_hat * v, exact sparse expansion in the r^2-dim space.
        std::vector<CycNum> w(static_cast<std::size_t>(r * r), CycNum(m));
        for (const auto& [yidx, coeff] : v) {
            for (i64 x = 0; x < r * r; ++x) {
                const CycNum& sxy = unfolded.S.at(x, yidx);
                if (coeff == 1)
                    w[static_cast<std::size_t>(x)] += sxy;
                else
                    w[static_cast<std::size_t>(x)] -= sxy;
            }
        }

        // Read off coefficients at the orbit seeds, then subtract.
        for (i64 b = 1; b <= h; ++b) {
            EisElem seed_same = odd_class ? EisElem(r, b, 0) : EisElem(r, b, 0) * sd.rho;
            EisElem seed_other = odd_class ? EisElem(r, b, 0) * sd.rho : EisElem(r, b, 0);
            CycNum cb = w[static_cast<std::size_t>(eis_index(seed_same))];
            CycNum db = w[static_cast<std::size_t>(eis_index(seed_other))];
            res.projected.at(b - 1, acol - 1) = cb;
            if (!db.is_zero()) res.opposite_sign_zero = false;
            for (const auto& [idx, coeff] :
                 same.vectors[static_cast<std::size_t>(b - 1)]) {
                CycNum delta = (coeff == 1) ? cb : -cb;
                w[static_cast<std::size_t>(idx)] -= delta;
            }
            for (const auto& [idx, coeff] :
                 other.vectors[static_cast<std::size_t>(b - 1)]) {
                CycNum delta = (coeff == 1) ? db : -db;
                w[static_cast<std::size_t>(idx)] -= delta;
            }
        }
        for (const auto& entry : w)
            if (!entry.is_zero()) res.leak_zero = false;

        // T_hat e^s_a = zeta^{-N(seed)} e^s_a; all support elements share
        // the norm, so the expected phase is the restricted T entry.
        EisElem seed_a = odd_class ? EisElem(r, acol, 0) : EisElem(r, acol, 0) * sd.rho;
        CycNum expected_phase = zeta_r_power(r, -seed_a.norm(), m);
        if (expected_phase != restricted.T.at(acol - 1, acol - 1)) res.t_eigen_ok = false;
        for (const auto& [idx, coeff] : v) {
            EisElem z = eis_from_index(r, idx);
            if (zeta_r_power(r, -z.norm(), m) != expected_phase) res.t_eigen_ok = false;
        }
    }

    res.ratio = entrywise_ratio(res.projected, restricted.S);
    return res;
}

} // namespace modrep
