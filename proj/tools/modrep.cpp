// Command-line front end: build representation matrices, run verification
// suites over primes, and emit machine-readable reports.
//
// Exit codes: 0 all checks passed, 1 at least one check failed,
// 2 usage or precondition error, 3 resource-guard refusal.

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modrep/modrep.hpp"

namespace {

using namespace modrep;

constexpr double kFloatTolerance = 1e-9;

struct OutputTarget {
    std::string path; // empty = stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            if (!content.empty() && content.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open output file: " + path);
        out << content;
    }
};

std::vector<i64> parse_primes(i64 prime, const std::string& range) {
    std::vector<i64> out;
    if (prime > 0 && !range.empty())
        throw std::invalid_argument("give either --prime or --primes, not both");
    if (prime > 0) {
        out.push_back(prime);
        return out;
    }
    if (range.empty()) return out;
    auto sep = range.find("..");
    if (sep == std::string::npos)
        throw std::invalid_argument("--primes expects the form A..B");
    i64 lo = std::stoll(range.substr(0, sep));
    i64 hi = std::stoll(range.substr(sep + 2));
    for (i64 p = lo; p <= hi; ++p)
        if (is_prime(p) && p % 2 == 1) out.push_back(p);
    return out;
}

i64 build_entry_guard() {
    i64 guard = 1024 * 1024; // matrix entries
    i64 commutant = default_commutant_options().max_exact_unknowns;
    return std::max(guard, commutant);
}

RepPair build_rep(i64 r, RepLabel label, i64 field_order) {
    switch (label) {
        case RepLabel::unfolded: return build_unfolded(r, field_order);
        case RepLabel::psu3_restricted: return build_restricted(r, field_order);
        case RepLabel::psu2: return build_psu2(r, field_order);
        case RepLabel::psu2_conjugated: return build_psu2_conjugated(r, field_order);
    }
    throw std::invalid_argument("unknown representation label");
}

i64 rep_dim(i64 r, RepLabel label) {
    return label == RepLabel::unfolded ? r * r : (r - 1) / 2;
}

std::string csv_of_rep(const RepPair& rep) {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "matrix,row,col,re,im\n";
    for (i64 i = 0; i < rep.dim; ++i)
        for (i64 j = 0; j < rep.dim; ++j) {
            std::complex<double> z = embed(rep.S.at(i, j), 96);
            os << "S," << i << "," << j << "," << z.real() << "," << z.imag() << "\n";
        }
    for (i64 i = 0; i < rep.dim; ++i) {
        std::complex<double> z = embed(rep.T.at(i, i), 96);
        os << "T," << i << "," << i << "," << z.real() << "," << z.imag() << "\n";
    }
    return os.str();
}

// Float-mode CSV for the unfolded pair without materializing exact entries.
std::string csv_of_unfolded_stream(i64 r) {
    require_supported_prime(r);
    std::ostringstream os;
    os << std::setprecision(17);
    os << "matrix,row,col,re,im\n";
    const double tau = 2.0 * M_PI / r;
    for (i64 xi = 0; xi < r * r; ++xi) {
        EisElem x = eis_from_index(r, xi);
        EisElem xc = x.conj();
        for (i64 yi = 0; yi < r * r; ++yi) {
            EisElem y = eis_from_index(r, yi);
            double ang = tau * static_cast<double>((xc * y).trace());
            os << "S," << xi << "," << yi << "," << std::cos(ang) << "," << std::sin(ang) << "\n";
        }
    }
    for (i64 xi = 0; xi < r * r; ++xi) {
        EisElem x = eis_from_index(r, xi);
        double ang = -tau * static_cast<double>(x.norm());
        os << "T," << xi << "," << xi << "," << std::cos(ang) << "," << std::sin(ang) << "\n";
    }
    return os.str();
}

std::string pretty_of_rep(const RepPair& rep) {
    std::ostringstream os;
    os << to_string(rep.label) << "  r = " << rep.r << "  dim = " << rep.dim
       << "  field order = " << rep.field_order << "\n";
    os << "T diagonal:\n";
    for (i64 i = 0; i < rep.dim; ++i)
        os << "  " << rep.basis_labels[static_cast<std::size_t>(i)] << ": "
           << rep.T.at(i, i).compress().to_string() << "\n";
    os << "S entries:\n";
    for (i64 i = 0; i < rep.dim; ++i)
        for (i64 j = 0; j < rep.dim; ++j)
            os << "  S[" << i + 1 << "," << j + 1 << "] = "
               << rep.S.at(i, j).compress().to_string() << "\n";
    return os.str();
}

int run_build(i64 prime, const std::string& rep_name, i64 field_order,
              const std::string& mode, const std::string& format, bool crosscheck,
              const OutputTarget& out) {
    RepLabel label = rep_label_from_string(rep_name);
    const i64 dim = rep_dim(prime, label);
    if (label == RepLabel::unfolded || label == RepLabel::psu3_restricted)
        require_supported_prime(prime);
    else
        require_odd_prime(prime);

    if (mode == "float") {
        if (format != "csv")
            throw std::invalid_argument("float mode emits numeric CSV only");
        std::string csv = (label == RepLabel::unfolded)
                              ? csv_of_unfolded_stream(prime)
                              : csv_of_rep(build_rep(prime, label, field_order));
        out.write(csv);
        return 0;
    }

    if (dim * dim > build_entry_guard())
        throw ResourceGuardError("build: " + std::to_string(dim * dim) +
                                 " exact entries exceed the guard (" +
                                 std::to_string(build_entry_guard()) +
                                 "); use --mode float with --format csv");

    RepPair rep = build_rep(prime, label, field_order);
    int exit_code = 0;
    std::optional<CrosscheckResult> cross;
    if (crosscheck && label == RepLabel::psu3_restricted) {
        cross = restriction_crosscheck(prime, field_order);
        bool ok = cross->leak_zero && cross->opposite_sign_zero && cross->t_eigen_ok &&
                  cross->ratio.has_value();
        if (!ok) exit_code = 1;
    }

    if (format == "json") {
        json j = to_json(rep);
        if (cross)
            j["crosscheck"] = json{{"leak_zero", cross->leak_zero},
                                   {"opposite_sign_zero", cross->opposite_sign_zero},
                                   {"t_eigenvalue_ok", cross->t_eigen_ok},
                                   {"ratio", cross->ratio ? cross->ratio->to_string() : ""}};
        out.write(j.dump(2));
    } else if (format == "csv") {
        out.write(csv_of_rep(rep));
    } else {
        out.write(pretty_of_rep(rep));
    }
    return exit_code;
}

int run_verify(i64 prime, const std::string& primes_range, const std::string& suite,
               i64 field_order, bool crosscheck, const std::string& format,
               const OutputTarget& out) {
    std::vector<i64> primes = parse_primes(prime, primes_range);
    if (primes.empty()) throw std::invalid_argument("verify: give --prime or --primes");

    SuiteOptions opts;
    opts.field_order = field_order;
    opts.crosscheck = crosscheck;

    bool all_ok = true;
    json results = json::array();
    std::ostringstream pretty;
    for (i64 r : primes) {
        VerifyReport report = run_suite(suite, r, opts);
        all_ok = all_ok && report.all_passed();
        results.push_back(to_json(report, suite));
        pretty << "prime " << r << ", suite " << suite << ": "
               << (report.all_passed() ? "pass" : "FAIL") << "\n";
        for (const auto& c : report.checks) {
            pretty << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
            if (!c.witness.empty()) pretty << "  (" << c.witness << ")";
            pretty << "\n";
        }
    }

    if (format == "json") {
        out.write(results.size() == 1 ? results[0].dump(2) : results.dump(2));
    } else if (format == "csv") {
        std::ostringstream os;
        os << "prime,check,passed,witness\n";
        for (const auto& rep : results)
            for (const auto& c : rep.at("checks")) {
                std::string w = c.at("witness").get<std::string>();
                for (auto& ch : w)
                    if (ch == ',' || ch == '\n') ch = ';';
                os << rep.at("prime").get<i64>() << "," << c.at("name").get<std::string>()
                   << "," << (c.at("passed").get<bool>() ? 1 : 0) << "," << w << "\n";
            }
        out.write(os.str());
    } else {
        out.write(pretty.str());
    }
    return all_ok ? 0 : 1;
}

json report_row(i64 r, const std::string& mode) {
    const i64 m = default_field_order(r);
    json row;
    row["prime"] = r;
    row["epsilon"] = ((r + 1) / 6 % 2 == 0) ? 1 : -1;

    VerifyReport t2 = theorem2_verify(r);
    row["theorem2_passed"] = t2.all_passed();
    if (t2.proportionality_constant) {
        std::complex<double> z = embed(*t2.proportionality_constant, 96);
        row["proportionality"] = t2.proportionality_constant->compress().to_string();
        row["proportionality_numeric"] = json::array({z.real(), z.imag()});
    }
    ProductCheck pc = product_check(r);
    if (pc.scalar) row["product_scalar"] = pc.scalar->compress().to_string();

    RepPair psu3 = build_restricted(r, m);
    RepPair psu2v = (r % 4 == 1) ? build_psu2(r, m) : build_psu2_conjugated(r, m);
    CommutantOptions copts = default_commutant_options();
    copts.allow_numeric = (mode == "float");
    for (const auto& [name, rep] : {std::pair<std::string, const RepPair*>{"psu3", &psu3},
                                    {"psu2", &psu2v}}) {
        try {
            CommutantResult c = commutant_dim(*rep, copts);
            row["commutant_" + name] = c.dim;
            if (!c.exact) row["commutant_" + name + "_tolerance"] = kFloatTolerance;
        } catch (const ResourceGuardError&) {
            row["commutant_" + name] = "guarded";
        }
    }

    // Charge-conjugation eigenspace dimensions of the unfolded space: the
    // only fixed point of z -> -z is 0.
    row["parity_dims"] = json::array({(r * r + 1) / 2, (r * r - 1) / 2});

    LiftedRep l3 = lift(psu3);
    LiftedRep l2 = lift(psu2v);
    row["lift_psu3"] = json::array({l3.c1.compress().to_string(), l3.c2.compress().to_string()});
    row["lift_psu2"] = json::array({l2.c1.compress().to_string(), l2.c2.compress().to_string()});
    return row;
}

int run_report(i64 prime, const std::string& primes_range,
               const std::vector<std::string>& inputs, const std::string& mode,
               const std::string& format, const OutputTarget& out) {
    json rows = json::array();
    if (!inputs.empty()) {
        for (const auto& path : inputs) {
            std::ifstream in(path);
            if (!in) throw std::invalid_argument("cannot open input file: " + path);
            json j = json::parse(in);
            for (const auto& rep : j.is_array() ? j : json::array({j})) {
                json row;
                row["prime"] = rep.value("prime", i64{0});
                row["suite"] = rep.value("suite", std::string("?"));
                row["all_passed"] = rep.value("all_passed", false);
                i64 npass = 0, nfail = 0;
                for (const auto& c : rep.value("checks", json::array()))
                    (c.at("passed").get<bool>() ? npass : nfail)++;
                row["checks_passed"] = npass;
                row["checks_failed"] = nfail;
                if (rep.contains("proportionality_constant"))
                    row["proportionality"] = rep["proportionality_constant"].value("str", "");
                rows.push_back(std::move(row));
            }
        }
    } else {
        for (i64 r : parse_primes(prime, primes_range)) {
            if (r % 3 != 2 || r < 5) continue;
            rows.push_back(report_row(r, mode));
        }
    }

    if (format == "json") {
        out.write(rows.dump(2));
    } else if (format == "csv") {
        std::ostringstream os;
        std::vector<std::string> keys;
        for (const auto& row : rows)
            for (auto it = row.begin(); it != row.end(); ++it)
                if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
                    keys.push_back(it.key());
        for (std::size_t k = 0; k < keys.size(); ++k) os << (k ? "," : "") << keys[k];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < keys.size(); ++k) {
                if (k) os << ",";
                if (row.contains(keys[k])) {
                    std::string v = row[keys[k]].is_string()
                                        ? row[keys[k]].get<std::string>()
                                        : row[keys[k]].dump();
                    for (auto& ch : v)
                        if (ch == ',') ch = ';';
                    os << v;
                }
            }
            os << "\n";
        }
        out.write(os.str());
    } else {
        std::ostringstream os;
        for (const auto& row : rows) {
            os << "prime " << row.value("prime", i64{0}) << ":\n";
            for (auto it = row.begin(); it != row.end(); ++it)
                if (it.key() != "prime") os << "  " << it.key() << " = " << it->dump() << "\n";
        }
        out.write(os.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SL(2,Z) representation toolkit for quantum PSU(3)/PSU(2) modular data"};
    app.require_subcommand(1);

    i64 prime = 0;
    std::string primes_range;
    std::string rep_name = "psu2";
    std::string suite = "all";
    std::string mode = "exact";
    std::string format = "pretty";
    std::string out_path;
    std::vector<std::string> inputs;
    i64 field_order = 0;
    bool crosscheck = false;

    auto add_common = [&](CLI::App* cmd, bool with_rep, bool with_suite) {
        cmd->add_option("--prime", prime, "single odd prime r");
        cmd->add_option("--primes", primes_range, "prime range A..B (odd primes within)");
        if (with_rep)
            cmd->add_option("--rep", rep_name, "unfolded | psu3 | psu2 | psu2conj");
        if (with_suite)
            cmd->add_option("--suite", suite,
                            "relations | symmetries | parity | identities | svalue | "
                            "theorem2 | crosscheck | all");
        cmd->add_option("--mode", mode, "exact | float (float = 1e-9 tolerance paths)")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--field-order", field_order,
                        "cyclotomic field order (multiple of 24r; default 24r)");
        cmd->add_flag("--crosscheck", crosscheck,
                      "also validate the restricted pair against the unfolded action");
        cmd->add_option("--format", format, "json | csv | pretty")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        cmd->add_option("--out", out_path, "output path (default stdout)");
    };

    CLI::App* build = app.add_subcommand("build", "construct S and T for one representation");
    add_common(build, true, false);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, false, true);
    CLI::App* report = app.add_subcommand("report", "per-prime summary table");
    add_common(report, false, false);
    report->add_option("--in", inputs, "previously written verify reports (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    OutputTarget out{out_path};
    try {
        if (build->parsed()) {
            if (prime <= 0) throw std::invalid_argument("build: --prime is required");
            return run_build(prime, rep_name, field_order, mode, format, crosscheck, out);
        }
        if (verify->parsed())
            return run_verify(prime, primes_range, suite, field_order, crosscheck, format, out);
        return run_report(prime, primes_range, inputs, mode, format, out);
    } catch (const modrep::ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
