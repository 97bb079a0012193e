#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arcminor/cli.hpp"
#include "arcminor/generate.hpp"
#include "arcminor/io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace arcminor;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "arcminor_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string corpus_file(const std::string& name)
{
    const fs::path p = scratch(name + ".json");
    save_family(corpus().at(name), p);
    return p.string();
}

std::string text_file(const std::string& name, const std::string& body)
{
    const fs::path p = scratch(name);
    std::ofstream(p) << body;
    return p.string();
}

} // namespace

TEST_CASE("certify a file")
{
    const Result r = run({"certify", "--input", corpus_file("c5"), "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["minor"]["target"] == 3);
    CHECK(doc["chi"] == 3);
}

TEST_CASE("stats of a disjoint pair")
{
    const Result r = run({"stats", "--input", corpus_file("disjoint2")});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["r_sup"] == 1);
    CHECK(doc["r_inf"] == 0);
    CHECK(doc["cover"].is_null());
    CHECK(doc["chi"].is_null());
    CHECK(Json::parse(run({"stats", "--corpus", "c5k3", "--exact"}).out)["chi"] == 8);
}

TEST_CASE("colorings")
{
    const Result tucker = run({"color", "--algo", "tucker", "--input", corpus_file("c5")});
    CHECK(tucker.code == 0);
    const Json doc = Json::parse(tucker.out);
    CHECK(doc["valid"] == true);
    CHECK(doc["num_colors"] <= 3);

    const Result exact = run({"color", "--algo", "exact", "--corpus", "c5k3"});
    CHECK(exact.code == 0);
    CHECK(Json::parse(exact.out)["num_colors"] == 8);

    // r + x - 1 = 7 colors cannot work on an 8-chromatic graph.
    const Result scheme = run({"color", "--algo", "scheme-even", "--corpus", "c5k3"});
    CHECK(scheme.code == 1);
    CHECK(Json::parse(scheme.out)["valid"] == false);

    CHECK(run({"color", "--algo", "scheme-odd2", "--corpus", "c5k3"}).code == 1);
    CHECK(run({"color", "--algo", "rainbow", "--corpus", "c5"}).code == 2);
}

TEST_CASE("check reports containment")
{
    const std::string nested = text_file("nested.json", R"({"circle": 8, "arcs": [{"l": 0, "r": 5}, {"l": 1, "r": 3}]})");
    const Result r = run({"check", "--input", nested});
    CHECK(r.code == 1);
    const Json doc = Json::parse(r.out);
    CHECK(doc["proper"] == false);
    CHECK(doc["containments"][0]["inner"] == "A1");
    CHECK(run({"check", "--corpus", "c5"}).code == 0);
    CHECK(run({"certify", "--input", nested}).code == 1);
}

TEST_CASE("usage and parse errors")
{
    CHECK(run({}).code == 2);
    const Result unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("certify") != std::string::npos);
    CHECK(run({"stats", "--corpus", "c5", "--format", "yaml"}).code == 2);
    CHECK(run({"stats"}).code == 2);
    CHECK(run({"stats", "--corpus", "nope"}).code == 2);
    CHECK(run({"stats", "--corpus", "c5", "--input", "x.json"}).code == 2);
    CHECK(run({"stats", "--input", text_file("broken.json", "{\"circle\": 4,\n\"arcs\": [}")}).code == 2);
    CHECK(run({"stats", "--input", text_file("dup.json", R"({"circle": 8, "arcs": [{"l": 0, "r": 4}, {"l": 4, "r": 6}]})")})
              .code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("oracle limits give exit code 3")
{
    CHECK(run({"certify", "--corpus", "c5k3", "--oracle-limit", "10"}).code == 3);
    ::setenv("ARCMINOR_ORACLE_LIMIT", "10", 1);
    CHECK(run({"certify", "--corpus", "c5k3"}).code == 3);
    CHECK(run({"certify", "--corpus", "c5"}).code == 0);
    ::unsetenv("ARCMINOR_ORACLE_LIMIT");
    CHECK(run({"certify", "--corpus", "c5k3", "--format", "text"}).code == 0);
}

TEST_CASE("generation is reproducible")
{
    const Result a = run({"gen", "--n", "7", "--seed", "42"});
    const Result b = run({"gen", "--n", "7", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const ArcFamily f = parse_family(a.out);
    CHECK(f.size() == 7);
    CHECK(is_proper(f).proper);
    CHECK(run({"gen", "--n", "7", "--seed", "43", "--mode", "perturbed-uniform"}).code == 0);
    CHECK(run({"gen", "--n", "0"}).code == 2);

    const fs::path out = scratch("generated.json");
    CHECK(run({"gen", "--n", "4", "--seed", "1", "--output", out.string()}).code == 0);
    CHECK(load_family(out).size() == 4);
}

TEST_CASE("batch audit is ordered by instance")
{
    const Result serial = run({"audit", "--random", "24", "--n", "9", "--seed", "5", "--jobs", "1"});
    const Result parallel = run({"audit", "--random", "24", "--n", "9", "--seed", "5", "--jobs", "4"});
    CHECK(serial.code == 0);
    CHECK(serial.out == parallel.out);
    const Json doc = Json::parse(serial.out);
    CHECK(doc["instances"].size() == 24);
    CHECK(doc["theorem_failures"] == 0);
    CHECK(run({"audit", "--corpus", "c5", "--format", "text"}).code == 0);
    CHECK(run({"audit", "--random", "2", "--corpus", "c5"}).code == 2);
}

TEST_CASE("bench table")
{
    const Result r = run({"bench"});
    CHECK(r.code == 0);
    const Json rows = Json::parse(r.out);
    CHECK(rows.size() == corpus().size());
    CHECK(rows[0].contains("certify_ms"));
}
