// End-to-end exercise of the command-line tool: exit codes, JSON round
// trips, and the report/verify surfaces. Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "modrep/serialize.hpp"

namespace fs = std::filesystem;
using namespace modrep;

namespace {

int failures = 0;
std::string binary;
fs::path workdir;

int run(const std::string& args) {
    std::string cmd = binary + " " + args + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

void expect(bool ok, const std::string& what) {
    std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

json load(const fs::path& p) {
    std::ifstream in(p);
    return json::parse(in);
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_driver <path-to-modrep>\n");
        return 2;
    }
    binary = argv[1];
    workdir = fs::temp_directory_path() / "modrep_cli_test";
    fs::create_directories(workdir);

    fs::path psu2_json = workdir / "psu2_5.json";
    expect(run("build --prime 5 --rep psu2 --format json --out " + psu2_json.string()) == 0,
           "build psu2 r=5 exits 0");
    {
        RepPair parsed = reppair_from_json(load(psu2_json));
        RepPair fresh = build_psu2(5);
        expect(parsed.S.equals(fresh.S) && parsed.T.equals(fresh.T) &&
                   parsed.basis_labels == fresh.basis_labels,
               "build output round-trips to the freshly built pair");
    }

    expect(run("build --prime 7 --rep psu3") == 2, "build psu3 r=7 exits 2 (r = 1 mod 3)");
    expect(run("build --prime 4 --rep psu2") == 2, "build with composite prime exits 2");
    expect(run("build --prime 5 --rep nosuch") == 2, "unknown representation exits 2");

    fs::path unf_json = workdir / "unfolded_5.json";
    expect(run("build --prime 5 --rep unfolded --format json --out " + unf_json.string()) == 0,
           "build unfolded r=5 exits 0");
    expect(load(unf_json).at("dim").get<i64>() == 25, "unfolded r=5 has dimension 25");

    expect(run("build --prime 41 --rep unfolded --format json") == 3,
           "oversized exact build trips the resource guard (exit 3)");
    fs::path unf_csv = workdir / "unfolded_41.csv";
    expect(run("build --prime 41 --rep unfolded --mode float --format csv --out " +
               unf_csv.string()) == 0,
           "float-mode CSV build of the same pair exits 0");

    fs::path psu2_csv = workdir / "psu2_5.csv";
    expect(run("build --prime 5 --rep psu2 --format csv --out " + psu2_csv.string()) == 0,
           "csv build exits 0");
    {
        std::ifstream in(psu2_csv);
        std::string header;
        std::getline(in, header);
        expect(header == "matrix,row,col,re,im", "csv header is stable");
    }

    fs::path t2_json = workdir / "theorem2_5.json";
    expect(run("verify --prime 5 --suite theorem2 --format json --out " + t2_json.string()) == 0,
           "verify theorem2 r=5 exits 0");
    {
        json j = load(t2_json);
        expect(j.at("all_passed").get<bool>(), "theorem2 report is all-passed");
        bool eps = false;
        for (const auto& c : j.at("checks"))
            if (c.at("name") == "parity_epsilon" && c.at("witness") == "epsilon = -1") eps = true;
        expect(eps, "report records epsilon = -1 at r = 5");
    }

    fs::path par_json = workdir / "parity_5.json";
    expect(run("verify --prime 5 --suite parity --format json --out " + par_json.string()) == 0,
           "verify parity r=5 exits 0");
    {
        json j = load(par_json);
        expect(j.at("parity_dims") == json::array({13, 12}), "parity dims are [13, 12]");
    }

    expect(run("verify --primes 5..11 --suite identities") == 0,
           "identities over 5..11 (includes r=7) exit 0");
    expect(run("verify --prime 7 --suite theorem2") == 2,
           "theorem2 at unsupported prime exits 2");
    expect(run("verify --prime 5 --suite nosuch") == 2, "unknown suite exits 2");
    expect(run("verify --suite theorem2") == 2, "verify without primes exits 2");

    fs::path rep_json = workdir / "report.json";
    expect(run("report --primes 5..11 --format json --out " + rep_json.string()) == 0,
           "report over 5..11 exits 0");
    {
        json j = load(rep_json);
        expect(j.is_array() && j.size() == 2 && j[0].at("prime") == 5 && j[1].at("prime") == 11,
               "report covers exactly the supported primes 5 and 11");
        expect(j[0].at("commutant_psu2") == 1 && j[0].at("commutant_psu3") == 1,
               "report lists computed commutant dimensions");
    }

    fs::path empty_json = workdir / "empty.json";
    expect(run("report --format json --out " + empty_json.string()) == 0,
           "empty report exits 0");
    expect(load(empty_json).is_array() && load(empty_json).empty(), "empty report is []");

    fs::path from_file = workdir / "from_file.json";
    expect(run("report --in " + t2_json.string() + " --format json --out " +
               from_file.string()) == 0,
           "report from prior verify output exits 0");
    {
        json j = load(from_file);
        expect(j.is_array() && j.size() == 1 && j[0].at("all_passed").get<bool>(),
               "file-based report reflects the stored run");
    }

    std::printf("%s\n", failures == 0 ? "cli driver: all ok" : "cli driver: FAILURES");
    return failures == 0 ? 0 : 1;
}
