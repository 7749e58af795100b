#include <catch2/catch_amalgamated.hpp>

#include "modrep/psu2.hpp"
#include "modrep/repcheck.hpp"

using namespace modrep;

TEST_CASE("quadratic character table") {
    QuadChar chi(11);
    CHECK(chi(0) == 0);
    CHECK(chi(11) == 0);
    for (i64 k = 1; k < 11; ++k) CHECK(chi(k * k) == 1);
    for (i64 a = 0; a < 11; ++a)
        for (i64 b = 0; b < 11; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
    CHECK_THROWS_AS(QuadChar(8), std::invalid_argument);
}

TEST_CASE("psu2 pair at r = 5") {
    RepPair rep = build_psu2(5);
    CHECK(rep.dim == 2);
    CHECK(rep.T.at(0, 0) == zeta_r_power(5, -1, 120));
    CHECK(rep.T.at(1, 1) == zeta_r_power(5, -4, 120));

    // S_11 = chi(1)(z^2 - z^-2) = z^2 - z^3.
    CHECK(rep.S.at(0, 0) == zeta_r_power(5, 2, 120) - zeta_r_power(5, 3, 120));
    // S_12 = chi(2)(z^4 - z^-4) = -(z^4 - z).
    CHECK(rep.S.at(0, 1) == -(zeta_r_power(5, 4, 120) - zeta_r_power(5, 1, 120)));

    // Symmetric; defined for any odd prime, also 7 = 1 mod 3.
    for (i64 r : {5, 7, 11}) {
        RepPair p = build_psu2(r);
        for (i64 a = 0; a < p.dim; ++a)
            for (i64 b = 0; b < p.dim; ++b) CHECK(p.S.at(a, b) == p.S.at(b, a));
    }
    CHECK_THROWS_AS(build_psu2(9), std::invalid_argument);
}

TEST_CASE("psu2 customary normalization at r = 5") {
    RepPair le = build_psu2_le_form(5);
    CHECK(le.T.at(0, 0) == CycNum::one(120));      // xi^0
    CHECK(le.T.at(1, 1) == zeta_r_power(5, 2, 120)); // xi^-2 = zeta^-8 = zeta^2
    CHECK(le.S.at(0, 0) == CycNum::one(120) - zeta_r_power(5, 1, 120)); // xi^0 - xi^-1
    for (i64 a = 0; a < 2; ++a)
        for (i64 b = 0; b < 2; ++b) CHECK(le.S.at(a, b) == le.S.at(b, a));
}

TEST_CASE("S' squares to -r times the identity") {
    for (i64 r : {5, 7, 11}) {
        RepPair p = build_psu2(r);
        auto scalar = (p.S * p.S).as_scalar_identity();
        REQUIRE(scalar.has_value());
        CHECK(*scalar == CycNum::from_rational(p.field_order, -Rational(r)));
    }
}

TEST_CASE("conjugated variant") {
    RepPair p = build_psu2(11);
    RepPair pc = build_psu2_conjugated(11);
    CHECK(pc.label == RepLabel::psu2_conjugated);
    for (i64 a = 0; a < p.dim; ++a)
        for (i64 b = 0; b < p.dim; ++b) CHECK(pc.S.at(a, b) == p.S.at(a, b).conj());
    for (i64 a = 0; a < p.dim; ++a) CHECK(pc.T.at(a, a) == p.T.at(a, a).conj());
}

TEST_CASE("reindex witness relates the two normalizations") {
    for (i64 r : {5, 11, 17}) {
        auto w = reindex_witness(r);
        REQUIRE(w.has_value());
        const i64 m = 24 * r;
        RepPair le = build_psu2_le_form(r, m);
        RepPair target = build_psu2(r, m);
        CycMatrix pm = w->perm.to_matrix(m);
        CycMatrix pinv = w->perm.inverse().to_matrix(m);
        CHECK((pm * le.S * pinv).equals(w->s_scalar * target.S));
        CHECK((pm * le.T * pinv).equals(w->t_scalar * target.T));
        // The recorded global factors: zeta^-2 on S, zeta on T.
        CHECK(w->s_scalar == zeta_r_power(r, -2, m));
        CHECK(w->t_scalar == zeta_r_power(r, 1, m));
    }
}

TEST_CASE("witness conjugation preserves the projective relations") {
    const i64 r = 5, m = 120;
    auto w = reindex_witness(r);
    REQUIRE(w.has_value());
    RepPair le = build_psu2_le_form(r, m);
    RepPair conj = le;
    CycMatrix pm = w->perm.to_matrix(m);
    CycMatrix pinv = w->perm.inverse().to_matrix(m);
    conj.S = pm * le.S * pinv;
    conj.T = pm * le.T * pinv;
    RelationScalars before = projective_relations(le);
    RelationScalars after = projective_relations(conj);
    REQUIRE(before.kappa.has_value());
    REQUIRE(after.kappa.has_value());
    CHECK(*before.kappa == *after.kappa);
    REQUIRE(before.lambda.has_value());
    REQUIRE(after.lambda.has_value());
    CHECK(*before.lambda == *after.lambda);
}
