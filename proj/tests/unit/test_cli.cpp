#include <doctest.h>

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "fermat/cli.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using fermat::test::data_path;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = fermat::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("fermat-pp3-test-" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct CacheGuard
{
    explicit CacheGuard(const fs::path& dir) { ::setenv("FERMAT_PP3_CACHE_DIR", dir.c_str(), 1); }
    ~CacheGuard() { ::unsetenv("FERMAT_PP3_CACHE_DIR"); }
};

const std::string cm7 = data_path("forms/cm_d7.forms");
const std::string synthetic = data_path("forms/synthetic_qsqrt2_d7.forms");
const std::string corpus = data_path("fields/sample_corpus.csv");

} // namespace

TEST_CASE("basic subcommands")
{
    Run r = run({"fields"});
    CHECK(r.code == 0);
    for (const char* name : {"Q(i)", "Q(sqrt(-7))", "Q(sqrt(-19))", "Q(sqrt(-43))", "Q(sqrt(-67))"})
        CHECK(r.out.find(name) != std::string::npos);

    r = run({"bounds", "ck", "--case", "quartic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("C_K = 47\n") != std::string::npos);
    r = run({"--json", "bounds", "ck", "--case", "duodecic"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["ck"] == "44483");

    r = run({"--json", "bounds", "rcg", "--field", "1", "--m", "1"});
    CHECK(nlohmann::json::parse(r.out)["invariants"] == nlohmann::json::array({2}));
    r = run({"--json", "bounds", "bk", "--field", "43", "--cubic-solvable", "true"});
    CHECK(nlohmann::json::parse(r.out)["bk_case_one"] == "199");
    r = run({"--json", "screen", "tower", "--n", "3"});
    CHECK(nlohmann::json::parse(r.out)["totally_ramified_at_2"] == true);
    r = run({"--json", "frey", "--field", "1", "--a", "1,0", "--b", "-1,0", "--c", "0,0", "--p", "5"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["invariants"]["c6"] == "-216,0");
}

TEST_CASE("usage and data errors map to exit codes")
{
    CHECK(run({}).code == fermat::cli::kExitUsage);
    CHECK(run({"nonsense"}).code == fermat::cli::kExitUsage);
    CHECK(run({"fields", "--bogus"}).code == fermat::cli::kExitUsage);
    CHECK(run({"bounds", "rcg", "--field", "5", "--m", "1"}).code == fermat::cli::kExitUsage);
    CHECK(run({"bounds", "rcg", "--field", "7", "--m", "4"}).code == fermat::cli::kExitUsage);
    CHECK(run({"screen", "tower", "--n", "11"}).code == fermat::cli::kExitUsage);
    CHECK(run({"eliminate", "--field", "7", "--forms", cm7}).code == fermat::cli::kExitUsage);
    CHECK(run({"frey", "--field", "1", "--a", "1,0", "--b", "1,0", "--c", "1,0", "--p", "9"}).code ==
          fermat::cli::kExitDataError);
    CHECK(run({"bounds", "aq", "--field", "1", "--norm", "6"}).code == fermat::cli::kExitDataError);

    const fs::path dir = scratch_dir("bad");
    const fs::path bad = dir / "bad.forms";
    std::ofstream(bad) << "field d=1 level lambda^3\nform a qf 0,1\nap 2,1 = 100\n";
    const Run r = run({"--no-cache", "eliminate", "--field", "1", "--forms", bad.string(), "--bk", "47"});
    CHECK(r.code == fermat::cli::kExitDataError);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("Hasse") != std::string::npos);
}

TEST_CASE("elimination verdicts and exit codes")
{
    const CacheGuard guard(scratch_dir("cache-verdicts"));
    Run r = run({"--json", "eliminate", "--field", "7", "--forms", cm7, "--auto-bk", "--cubic-solvable",
                 "true", "--expect", data_path("forms/expectations.txt")});
    // The bundled CM fixture is only one of the three known forms at lambda^3,
    // so the lambda^3 expectation cannot pass.
    CHECK(r.code == fermat::cli::kExitDataError);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["forms"][0]["verdict"] == "CMCandidate");
    CHECK(j["forms"][0]["c_f"] == "0");

    r = run({"eliminate", "--field", "7", "--forms", cm7, "--bk", "47"});
    CHECK(r.code == 0);
    CHECK(r.out.find("CMCandidate") != std::string::npos);

    r = run({"eliminate", "--field", "7", "--forms", synthetic, "--bk", "3"});
    CHECK(r.code == fermat::cli::kExitSurvivors);
    r = run({"eliminate", "--field", "7", "--forms", synthetic, "--auto-bk", "--cubic-solvable", "true"});
    CHECK(r.code == 0);
    CHECK(r.out.find("EliminatedBelow") != std::string::npos);
}

TEST_CASE("outputs are deterministic and the cache is transparent")
{
    const fs::path cache = scratch_dir("cache-determinism");
    const CacheGuard guard(cache);
    const std::vector<std::vector<std::string>> commands{
        {"fields"},
        {"bounds", "ck", "--case", "quartic"},
        {"bounds", "rcg", "--field", "19", "--m", "3"},
        {"bounds", "aq", "--field", "7", "--norm", "11"},
        {"bounds", "bk", "--field", "67", "--cubic-solvable", "false", "--mk", "123457"},
        {"frey", "--field", "43", "--a", "2,1", "--b", "3,0", "--c", "5,-1", "--p", "7"},
        {"screen", "--input", corpus, "--signature", "pp3", "--budget", "20"},
        {"screen", "--input", corpus, "--signature", "pp2", "--csv"},
        {"screen", "tower", "--n", "4"},
        {"eliminate", "--field", "7", "--forms", synthetic, "--bk", "47"},
        {"pipeline", "--field", "7", "--cubic-solvable", "true", "--forms", cm7},
    };
    for (const auto& c : commands) {
        const bool csv = std::find(c.begin(), c.end(), "--csv") != c.end();
        for (bool json : {false, true}) {
            if (json && csv)
                continue;
            std::vector<std::string> args = c;
            if (json)
                args.insert(args.begin(), "--json");
            const Run first = run(args), second = run(args);
            INFO(args[json ? 1 : 0]);
            CHECK(first.code == 0);
            CHECK(first.code == second.code);
            CHECK(first.out == second.out);
            args.insert(args.begin(), "--no-cache");
            CHECK(run(args).out == first.out);
        }
    }
    CHECK(fs::exists(cache / "index.txt"));
}

TEST_CASE("run manifest")
{
    const fs::path dir = scratch_dir("manifest");
    const fs::path manifest = dir / "run.json";
    const Run r = run({"--manifest", manifest.string(), "--no-cache", "eliminate", "--field", "7",
                       "--forms", cm7, "--bk", "47"});
    REQUIRE(r.code == 0);
    std::ifstream in(manifest);
    const auto m = nlohmann::json::parse(in);
    CHECK(m["command"] == "eliminate");
    CHECK(m["parameters"]["bk"] == "47");
    REQUIRE(m["inputs"].size() == 1);
    CHECK(m["inputs"][0]["path"] == cm7);
    CHECK(m["inputs"][0]["sha256"].get<std::string>().size() == 64);
    CHECK(m.contains("version"));
    CHECK(m.contains("timestamp"));

    CHECK(run({"--manifest", (dir / "missing" / "x.json").string(), "fields"}).code ==
          fermat::cli::kExitDataError);
}
