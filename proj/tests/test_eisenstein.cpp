#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "modrep/eisenstein.hpp"

using namespace modrep;

TEST_CASE("norm, trace and conjugation") {
    for (i64 r : {5, 11, 17}) {
        EisElem w = EisElem::omega(r);
        CHECK(w.norm() == 1);
        CHECK(w.trace() == r - 1);
        CHECK(w * w == EisElem(r, -1, -1)); // w^2 = -1 - w
    }
    CHECK(EisElem(5, 1, 2).norm() == 3); // (1+2w)(1+2conj(w)) = 1 - 2 + 4
    CHECK(EisElem(7, 3, 5).conj() == EisElem(7, 3 - 5, -5));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        EisElem z(11, static_cast<i64>(rng() % 11), static_cast<i64>(rng() % 11));
        CHECK(z.conj().conj() == z);
        CHECK((z * z.conj()).a == z.norm());
        CHECK((z * z.conj()).b == 0);
        CHECK(mod_reduce(z.a + z.conj().a, 11) == z.trace());
    }
}

TEST_CASE("inverse in the residue field") {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 50) {
        EisElem z(13 - 2, static_cast<i64>(rng() % 11), static_cast<i64>(rng() % 11));
        if (z.is_zero()) continue;
        CHECK(z * z.inverse() == EisElem::one(11));
        ++tested;
    }
    CHECK_THROWS_AS(EisElem::zero(11).inverse(), std::domain_error);
}

TEST_CASE("symmetry data at r = 5") {
    SymmetryData sd = build_symmetry_data(5);
    CHECK(sd.n == 1);
    CHECK(sd.u == EisElem(5, 1, 1)); // 1 + w: the unique generator with u^2 = w
    CHECK(sd.u.pow(2) == EisElem::omega(5));
    CHECK(sd.u.pow(3) == -EisElem::one(5));
    CHECK(element_order(sd.u, 6) == 6);
    CHECK(sd.rho == EisElem(5, 1, 2));
    CHECK(sd.rho.norm() == 3);
    CHECK(legendre(3, 5) == -1); // squares mod 5 are {1, 4}
    CHECK(sd.trace_u == std::vector<i64>{2, 1, 4, 3, 4, 1});
}

TEST_CASE("symmetry data at r = 11") {
    SymmetryData sd = build_symmetry_data(11);
    CHECK(sd.n == 2);
    CHECK(sd.u.norm() == 1);
    CHECK(sd.u.pow(4) == EisElem::omega(11));
    CHECK(sd.u.pow(6) == -EisElem::one(11));
    CHECK(element_order(sd.u, 12) == 12);
    CHECK(sd.rho.norm() == mod_reduce(-1, 11));
    CHECK(sd.rho.conj() == sd.u * sd.rho);
    CHECK(norm_one_elements(11).size() == 12);
}

TEST_CASE("unsupported primes are rejected") {
    CHECK_THROWS_AS(build_symmetry_data(7), std::invalid_argument);  // 7 = 1 mod 3
    CHECK_THROWS_AS(build_symmetry_data(13), std::invalid_argument); // 13 = 1 mod 3
    CHECK_THROWS_AS(build_symmetry_data(9), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(build_symmetry_data(2), std::invalid_argument);
}

TEST_CASE("norm-one subgroup structure") {
    for (i64 r : {5, 11, 17, 23, 29}) {
        auto units = norm_one_elements(r);
        CHECK(static_cast<i64>(units.size()) == r + 1);

        // z -> z^(r-1) maps the full multiplicative group onto the norm-one
        // subgroup.
        std::set<std::pair<i64, i64>> image, expected;
        for (const auto& z : units) expected.insert({z.a, z.b});
        for (i64 a = 0; a < r; ++a)
            for (i64 b = 0; b < r; ++b) {
                EisElem z(r, a, b);
                if (z.is_zero()) continue;
                EisElem p = z.pow(r - 1);
                image.insert({p.a, p.b});
            }
        CHECK(image == expected);
    }
}

TEST_CASE("trace antisymmetry along the u-orbit") {
    for (i64 r : {5, 11, 17, 23}) {
        SymmetryData sd = build_symmetry_data(r);
        for (i64 j = 0; j + 3 * sd.n <= r; ++j)
            CHECK(mod_reduce(sd.trace_u[static_cast<std::size_t>(j + 3 * sd.n)] +
                                 sd.trace_u[static_cast<std::size_t>(j)],
                             r) == 0);
    }
}

TEST_CASE("quadratic residue classes per r mod 4") {
    for (i64 r : {5, 17, 29, 41}) {
        CHECK(legendre(3, r) == -1);
        CHECK(legendre(mod_reduce(-3, r), r) == -1);
    }
    for (i64 r : {11, 23, 47}) CHECK(legendre(mod_reduce(-1, r), r) == -1);
}

TEST_CASE("rho with conj(rho) = u rho exists for r = 3 mod 4") {
    for (i64 r : {11, 23, 47}) {
        SymmetryData sd = build_symmetry_data(r);
        CHECK(sd.rho.norm() == mod_reduce(-1, r));
        CHECK(sd.rho.conj() == sd.u * sd.rho);
        CHECK(legendre(sd.rho.norm(), r) == -1);
    }
}

TEST_CASE("weyl orbit") {
    // Fixed point at zero.
    for (auto& [image, sign] : weyl_orbit(EisElem::zero(5))) {
        CHECK(image.is_zero());
        CHECK((sign == 1 || sign == -1));
    }

    // r = 5, z = 1: conj(1) = 1, so the orbit is +1, +w, +w^2, -(-1), ...
    auto orbit = weyl_orbit(EisElem::one(5));
    EisElem w = EisElem::omega(5), one = EisElem::one(5);
    CHECK(orbit[0] == std::pair<EisElem, int>{one, 1});
    CHECK(orbit[1] == std::pair<EisElem, int>{w, 1});
    CHECK(orbit[2] == std::pair<EisElem, int>{w * w, 1});
    CHECK(orbit[3] == std::pair<EisElem, int>{-one, -1});
    CHECK(orbit[4] == std::pair<EisElem, int>{-w, -1});
    CHECK(orbit[5] == std::pair<EisElem, int>{-(w * w), -1});

    // Orbits of z and w*z agree as multisets of signed elements.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 50; ++i) {
        EisElem z(11, static_cast<i64>(rng() % 11), static_cast<i64>(rng() % 11));
        auto o1 = weyl_orbit(z);
        auto o2 = weyl_orbit(EisElem::omega(11) * z);
        std::multiset<std::tuple<i64, i64, int>> m1, m2;
        for (auto& [img, s] : o1) m1.insert({img.a, img.b, s});
        for (auto& [img, s] : o2) m2.insert({img.a, img.b, s});
        CHECK(m1 == m2);
    }
}
