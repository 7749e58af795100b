#pragma once

#include <json.hpp>

#include "modrep/eisenstein.hpp"
#include "modrep/repcheck.hpp"
#include "modrep/reppair.hpp"

namespace modrep {

using json = nlohmann::ordered_json;

/// CycNum <-> {order, terms: [[exponent, numerator, denominator], ...]},
/// serialized in canonical (power-basis) form so equal values produce
/// identical JSON. Coefficients must fit in 64-bit integers.
inline json to_json(const CycNum& x) {
    CycNum can = x.canonical();
    json terms = json::array();
    for (const auto& [e, c] : can.terms()) {
        const mpz_class num = c.get_num();
        const mpz_class den = c.get_den();
        if (!num.fits_slong_p() || !den.fits_slong_p())
            throw std::domain_error("CycNum serialization: coefficient exceeds 64-bit range");
        terms.push_back(json::array({e, num.get_si(), den.get_si()}));
    }
    return json{{"order", x.order()}, {"terms", std::move(terms)}};
}

inline CycNum cycnum_from_json(const json& j) {
    i64 order = j.at("order").get<i64>();
    CycNum x(order);
    for (const auto& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("CycNum JSON: each term must be [exponent, num, den]");
        i64 e = term[0].get<i64>();
        Rational c(term[1].get<long>(), term[2].get<long>());
        c.canonicalize();
        x.add_term(e, c);
    }
    return x;
}

inline json to_json(const EisElem& z) { return json{{"r", z.r}, {"a", z.a}, {"b", z.b}}; }

inline EisElem eis_from_json(const json& j) {
    return EisElem(j.at("r").get<i64>(), j.at("a").get<i64>(), j.at("b").get<i64>());
}

inline json to_json(const RepPair& rep) {
    json s_rows = json::array();
    for (i64 i = 0; i < rep.dim; ++i) {
        json row = json::array();
        for (i64 j = 0; j < rep.dim; ++j) row.push_back(to_json(rep.S.at(i, j)));
        s_rows.push_back(std::move(row));
    }
    json t_diag = json::array();
    for (i64 i = 0; i < rep.dim; ++i) t_diag.push_back(to_json(rep.T.at(i, i)));
    return json{{"schema", 1},
                {"prime", rep.r},
                {"label", to_string(rep.label)},
                {"dim", rep.dim},
                {"field_order", rep.field_order},
                {"basis_labels", rep.basis_labels},
                {"S", std::move(s_rows)},
                {"T", std::move(t_diag)}};
}

inline RepPair reppair_from_json(const json& j) {
    if (j.value("schema", 0) != 1)
        throw std::invalid_argument("RepPair JSON: unsupported schema version");
    RepPair rep;
    rep.r = j.at("prime").get<i64>();
    rep.dim = j.at("dim").get<i64>();
    rep.field_order = j.at("field_order").get<i64>();
    rep.label = rep_label_from_string(j.at("label").get<std::string>());
    rep.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
    rep.S = CycMatrix(rep.dim, rep.dim, rep.field_order);
    rep.T = CycMatrix(rep.dim, rep.dim, rep.field_order);
    const json& s_rows = j.at("S");
    for (i64 i = 0; i < rep.dim; ++i)
        for (i64 jj = 0; jj < rep.dim; ++jj) {
            CycNum entry = cycnum_from_json(s_rows.at(static_cast<std::size_t>(i))
                                                  .at(static_cast<std::size_t>(jj)));
            if (entry.order() != rep.field_order)
                throw std::invalid_argument("RepPair JSON: entry order mismatch");
            rep.S.at(i, jj) = std::move(entry);
        }
    const json& t_diag = j.at("T");
    for (i64 i = 0; i < rep.dim; ++i)
        rep.T.at(i, i) = cycnum_from_json(t_diag.at(static_cast<std::size_t>(i)));
    return rep;
}

inline json to_json(const VerifyReport& report, const std::string& suite = "") {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
    json out{{"schema", 1},
             {"prime", report.prime},
             {"all_passed", report.all_passed()},
             {"checks", std::move(checks)}};
    if (!suite.empty()) out["suite"] = suite;
    if (report.commutant_dim) out["commutant_dim"] = *report.commutant_dim;
    if (report.parity_dims)
        out["parity_dims"] = json::array({report.parity_dims->first, report.parity_dims->second});
    if (report.proportionality_constant) {
        const CycNum& c = *report.proportionality_constant;
        std::complex<double> z = embed(c, 96);
        out["proportionality_constant"] =
            json{{"exact", to_json(c)},
                 {"str", c.to_string()},
                 {"numeric", json::array({z.real(), z.imag()})}};
    }
    return out;
}

} // namespace modrep
