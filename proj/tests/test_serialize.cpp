#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "modrep/serialize.hpp"

using namespace modrep;

TEST_CASE("CycNum JSON round trip") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        i64 order = std::vector<i64>{12, 24, 120}[i % 3];
        CycNum x(order);
        int terms = 1 + static_cast<int>(rng() % 5);
        for (int t = 0; t < terms; ++t)
            x.add_term(static_cast<i64>(rng() % static_cast<unsigned long>(order)),
                       Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5)));
        CycNum back = cycnum_from_json(to_json(x));
        CHECK(back == x);
        CHECK(back.order() == x.order());
    }
}

TEST_CASE("equal values serialize identically") {
    CycNum a = root_power(12, 4);
    CycNum b = -CycNum::one(12) - root_power(12, 8);
    REQUIRE(a == b);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("oversized coefficients are rejected") {
    CycNum x(5);
    mpz_class big = 1;
    for (int i = 0; i < 80; ++i) big *= 2;
    x.add_term(1, Rational(big));
    CHECK_THROWS_AS(to_json(x), std::domain_error);
}

TEST_CASE("EisElem JSON round trip") {
    EisElem z(11, 7, 3);
    CHECK(eis_from_json(to_json(z)) == z);
}

TEST_CASE("RepPair JSON round trip") {
    for (const RepPair& rep :
         {build_psu2(5), build_restricted(5), build_unfolded(5), build_psu2_conjugated(11)}) {
        json j = to_json(rep);
        CHECK(j.at("schema").get<int>() == 1);
        RepPair back = reppair_from_json(j);
        CHECK(back.r == rep.r);
        CHECK(back.dim == rep.dim);
        CHECK(back.field_order == rep.field_order);
        CHECK(back.label == rep.label);
        CHECK(back.basis_labels == rep.basis_labels);
        CHECK(back.S.equals(rep.S));
        CHECK(back.T.equals(rep.T));
    }
}

TEST_CASE("verify report serialization") {
    VerifyReport report = theorem2_verify(5);
    json j = to_json(report, "theorem2");
    CHECK(j.at("prime").get<i64>() == 5);
    CHECK(j.at("suite").get<std::string>() == "theorem2");
    CHECK(j.at("all_passed").get<bool>());
    CHECK(j.at("checks").is_array());
    CHECK(j.contains("proportionality_constant"));
    double re = j["proportionality_constant"]["numeric"][0].get<double>();
    CHECK(re == Catch::Approx(-std::sqrt(5.0)).margin(1e-6));
}
