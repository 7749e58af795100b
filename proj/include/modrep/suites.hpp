#pragma once

#include <random>
#include <string>

#include "modrep/repcheck.hpp"

namespace modrep {

/// Projective relations and honest lifts for the restricted PSU(3) pair
/// (when defined) and the PSU(2) pair.
inline VerifyReport suite_relations(i64 r, i64 field_order = 0) {
    require_odd_prime(r);
    VerifyReport report;
    report.prime = r;

    auto run_one = [&](const RepPair& rep, const std::string& prefix) {
        RelationScalars rel = projective_relations(rep);
        report.merge(rel.report, prefix);
        try {
            LiftedRep lifted = lift(rep);
            report.add(prefix + ".lift", true,
                       "c1 = " + lifted.c1.to_string() + ", c2 = " + lifted.c2.to_string());
            double defect = lift_unitarity_defect(lifted);
            report.add(prefix + ".lift_numerically_unitary", defect < 1e-9,
                       "max deviation " + std::to_string(defect));
        } catch (const LiftError& e) {
            report.add(prefix + ".lift", false, e.what());
        }
    };

    run_one(build_psu2(r, field_order), "psu2");
    if (r % 3 == 2 && r >= 5) run_one(build_restricted(r, field_order), "psu3_restricted");
    return report;
}

/// Character-sum identities for one prime: exhaustive where the parameter
/// space has at most r^2 points, 100 deterministic pseudo-random samples
/// otherwise.
inline VerifyReport suite_identities(i64 r, int samples = 100) {
    require_odd_prime(r);
    VerifyReport report;
    report.prime = r;
    std::mt19937_64 rng(0x5eed0000 + static_cast<unsigned long>(r));
    auto draw = [&]() { return static_cast<i64>(rng() % static_cast<unsigned long>(r)); };

    bool gauss_ok = true;
    for (i64 l = 0; l < r; ++l)
        if (!gauss_identity(r, l).equal) gauss_ok = false;
    report.add("gauss_identity", gauss_ok, "exhaustive over l in Z/" + std::to_string(r));

    bool deg2_ok = true;
    for (int k = 0; k < samples; ++k) {
        Degree2Sum d = degree2_sum(r, draw(), draw(), draw());
        if (!d.matches) deg2_ok = false;
    }
    report.add("degree2_sum", deg2_ok, std::to_string(samples) + " random (a,b,c)");

    bool square_ok = true;
    for (int k = 0; k < samples; ++k) {
        std::vector<i64> f{draw(), draw(), draw(), draw()};
        if (!square_identity(r, f).equal) square_ok = false;
    }
    report.add("square_identity", square_ok, std::to_string(samples) + " random cubics");

    bool jac_ok = true;
    for (i64 a = 0; a < r; ++a)
        for (i64 b = 0; b < r; ++b)
            if (!jacobsthal_identity(r, a, b).equal) jac_ok = false;
    report.add("jacobsthal_identity", jac_ok, "exhaustive over (a,b) in (Z/" + std::to_string(r) + ")^2");

    if (r % 3 == 2 && r >= 5) {
        bool ab_ok = true;
        const i64 h = (r - 1) / 2;
        for (i64 i = 1; i <= h; ++i)
            for (i64 j = 1; j <= h; ++j)
                if (i != j && !alpha_beta_identity(r, i, j).equal) ab_ok = false;
        report.add("alpha_beta_identity", ab_ok, "exhaustive over off-diagonal (i,j)");
    }
    return report;
}

/// The alternating trace sum in both closed forms, plus its behaviour under
/// conjugation (odd under conjugation for r = 1 mod 4, fixed for r = 3 mod 4).
inline VerifyReport suite_svalue(i64 r) {
    require_supported_prime(r);
    VerifyReport report;
    report.prime = r;
    CycIdentity s = s_value(r);
    report.add("s_direct_equals_closed", s.equal,
               "direct = " + s.lhs.to_string());
    CycNum conj_s = s.lhs.conj();
    if (r % 4 == 1)
        report.add("s_conjugate_negates", conj_s == -s.lhs);
    else
        report.add("s_conjugate_fixes", conj_s == s.lhs);
    return report;
}

inline VerifyReport suite_parity(i64 r, i64 field_order = 0) {
    ParitySplit split = parity_split(build_unfolded(r, field_order));
    return split.report;
}

inline VerifyReport suite_crosscheck(i64 r, i64 field_order = 0) {
    VerifyReport report;
    report.prime = r;
    CrosscheckResult cross = restriction_crosscheck(r, field_order);
    report.add("restriction_leakage_zero", cross.leak_zero);
    report.add("restriction_opposite_sign_zero", cross.opposite_sign_zero);
    report.add("restriction_t_eigenvalue", cross.t_eigen_ok);
    report.add("restriction_matches_closed_form", cross.ratio.has_value(),
               cross.ratio ? "ratio = " + cross.ratio->to_string() : "no global ratio");
    return report;
}

struct SuiteOptions {
    i64 field_order = 0;
    bool crosscheck = false;
};

/// Dispatch by suite name; "all" runs everything applicable to the prime.
inline VerifyReport run_suite(const std::string& suite, i64 r, const SuiteOptions& opts = {}) {
    const bool supported = (r % 3 == 2 && r >= 5 && is_prime(r));
    if (suite == "relations") return suite_relations(r, opts.field_order);
    if (suite == "identities") return suite_identities(r);
    if (suite == "svalue") return suite_svalue(r);
    if (suite == "symmetries") return symmetry_suite(r, opts.field_order);
    if (suite == "parity") return suite_parity(r, opts.field_order);
    if (suite == "theorem2") return theorem2_verify(r, opts.field_order);
    if (suite == "crosscheck") return suite_crosscheck(r, opts.field_order);
    if (suite == "all") {
        VerifyReport report;
        report.prime = r;
        report.merge(suite_identities(r), "identities");
        report.merge(suite_relations(r, opts.field_order), "relations");
        if (supported) {
            report.merge(suite_svalue(r), "svalue");
            report.merge(symmetry_suite(r, opts.field_order), "symmetries");
            report.merge(suite_parity(r, opts.field_order), "parity");
            report.merge(theorem2_verify(r, opts.field_order), "theorem2");
            if (opts.crosscheck) report.merge(suite_crosscheck(r, opts.field_order), "crosscheck");
        }
        return report;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

} // namespace modrep
