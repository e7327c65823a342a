#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "coorth/cli_app.hpp"
#include "coorth/json_io.hpp"

using namespace coorth;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path(std::string("cli_tmp_") + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

Json run_json(const std::vector<std::string>& args, int expect_exit = 0) {
    const CliResult result = run_cli(args);
    REQUIRE(result.exit_code == expect_exit);
    return Json::parse(result.output);
}

}  // namespace

TEST_CASE("orthogonal command: verdict, certificate, support face") {
    TempFile space("linf2.json", R"({"kind":"linf","n":2})");
    const Json doc =
        run_json({"orthogonal", "--space", space.path, "-x", "1,1", "-y", "1,-1", "--json"});
    CHECK(doc["orthogonal"] == true);
    CHECK(doc["certificate"] == Json::parse(R"(["1/2","1/2"])"));
    CHECK(doc["support_face"]["vertices"].size() == 2);

    const Json zero = run_json({"orthogonal", "--space", space.path, "-x", "1,0", "-y", "0,0"});
    CHECK(zero["orthogonal"] == true);
    CHECK(zero["certificate"].is_null());

    const Json no = run_json({"orthogonal", "--space", space.path, "-x", "1,0", "-y", "1,1"});
    CHECK(no["orthogonal"] == false);
    CHECK(no["certificate"].is_null());
}

TEST_CASE("eps-orthogonal command and input errors") {
    TempFile space("linf2b.json", R"({"kind":"linf","n":2})");
    const Json yes = run_json(
        {"eps-orthogonal", "--space", space.path, "-x", "1,0", "-y", "1,2", "--eps", "1/2"});
    CHECK(yes["orthogonal"] == true);

    const CliResult bad_eps =
        run_cli({"eps-orthogonal", "--space", space.path, "-x", "1,0", "-y", "1,1", "--eps", "3/2"});
    CHECK(bad_eps.exit_code == 2);
    CHECK(Json::parse(bad_eps.output)["error"] == "epsilon out of range");

    const CliResult bad_dim =
        run_cli({"orthogonal", "--space", space.path, "-x", "1,0,0", "-y", "1,1,0"});
    CHECK(bad_dim.exit_code == 2);

    const CliResult no_file = run_cli({"orthogonal", "--space", "missing.json", "-x", "1", "-y", "1"});
    CHECK(no_file.exit_code == 2);

    const CliResult bad_args = run_cli({"orthogonal"});
    CHECK(bad_args.exit_code == 2);
}

TEST_CASE("check anti / strong / selection / embed") {
    TempFile axis("axis.json", R"({"space":{"kind":"l1","n":2},"basis":[["1","0"]]})");
    const Json anti = run_json({"check", "anti", "--subspace", axis.path});
    CHECK(anti["anti"] == false);
    CHECK(!anti["direction"].is_null());

    const Json strong = run_json({"check", "strong", "--subspace", axis.path});
    CHECK(strong["strong"] == false);
    CHECK(strong["eps_min"] == "0");
    CHECK(strong["anti"] == false);
    CHECK(strong["coverage"].size() == 4);

    TempFile diag("diag.json", R"({"space":{"kind":"linf","n":2},"basis":[["1","1"]]})");
    const Json embed = run_json({"check", "embed", "--subspace", diag.path});
    CHECK(embed["embed"]["r"] == 1);
    CHECK(embed["embed"]["isometric_linf_n"] == true);
    CHECK(embed["consistency"]["isometry_ok"] == true);

    const Json selection = run_json({"check", "selection", "--subspace", diag.path});
    CHECK(selection["selection"]["minimal_exists"] == false);
    CHECK(selection["selection"]["facet_pairs"] == 1);
}

TEST_CASE("coapprox command reports the exact solution range") {
    TempFile diag("diag2.json", R"({"space":{"kind":"linf","n":2},"basis":[["1","1"]]})");
    const Json doc = run_json({"coapprox", "--subspace", diag.path, "-x", "1,0"});
    CHECK(doc["found"] == true);
    CHECK(doc["unique"] == false);
    CHECK(doc["coeff_min"] == Json::parse(R"(["0"])"));
    CHECK(doc["coeff_max"] == Json::parse(R"(["1"])"));
}

TEST_CASE("probe command is deterministic and seed-stamped") {
    TempFile diag("diag3.json", R"({"space":{"kind":"linf","n":2},"basis":[["1","1"]]})");
    const CliResult a =
        run_cli({"probe", "coproximinal", "--subspace", diag.path, "--samples", "5", "--seed", "9"});
    const CliResult b =
        run_cli({"probe", "coproximinal", "--subspace", diag.path, "--samples", "5", "--seed", "9"});
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);  // byte-identical
    const Json doc = Json::parse(a.output);
    CHECK(doc["outcome"] == "certified");
    CHECK(doc["seed"] == 9);
}

TEST_CASE("paper-example output is deterministic and matches the bundle") {
    const CliResult a = run_cli({"paper-example", "--json"});
    const CliResult b = run_cli({"paper-example", "--json"});
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const Json doc = Json::parse(a.output);
    CHECK(doc["dim"] == 5);
    CHECK(doc["strong"] == true);
    CHECK(doc["anti"] == true);
    CHECK(doc["covered_vertices"] == 16);
    CHECK(doc["eps_min"] == "1");
}

TEST_CASE("capacity override via COORTH_MAX_PATTERNS yields exit 3 with partial results") {
    TempFile diag("diag4.json", R"({"space":{"kind":"linf","n":2},"basis":[["1","1"]]})");
    setenv("COORTH_MAX_PATTERNS", "0", 1);
    const CliResult bad = run_cli({"coapprox", "--subspace", diag.path, "-x", "1,0"});
    CHECK(bad.exit_code == 2);  // zero is not a positive integer
    setenv("COORTH_MAX_PATTERNS", "1", 1);
    const CliResult capped = run_cli({"coapprox", "--subspace", diag.path, "-x", "1,0"});
    unsetenv("COORTH_MAX_PATTERNS");
    CHECK(capped.exit_code == 3);
    const Json doc = Json::parse(capped.output);
    CHECK(doc["capacity_exceeded"] == true);
    CHECK(doc["unique"].is_null());  // budget cut the scan short
    CHECK(doc["patterns_examined"] == 1);
    CHECK(doc["pattern_total"] == 4);
}

namespace {

bool has_float(const Json& value) {
    if (value.is_number_float()) return true;
    if (value.is_object() || value.is_array())
        for (const auto& child : value)
            if (has_float(child)) return true;
    return false;
}

}  // namespace

TEST_CASE("no floating point appears anywhere in output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"paper-example", "--json"}, {"paper-example"}}) {
        const CliResult result = run_cli(args);
        CHECK(result.output.find('.') == std::string::npos);
        CHECK(!has_float(Json::parse(result.output)));
    }
}
