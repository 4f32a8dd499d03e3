#include "mori/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mori;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("beta subcommand emits the exact report", "[cli]") {
    CliResult result = run({"beta", "--n", "3", "--d", "2", "--k", "1", "--r", "1"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    CHECK(json.at("S") == "25/23");
    CHECK(json.at("A") == "1");
    CHECK(json.at("beta") == "-2/23");
    CHECK(json.at("verdict") == "UnstableAlongE");
    // the serialized rationals parse back to the report values
    StabilityReport report = beta_of_E(config_from_json(json.at("config")));
    CHECK(rat_from_string(json.at("S").get<std::string>()) == report.s_invariant);
    CHECK(rat_from_string(json.at("beta").get<std::string>()) == report.beta);
    CHECK(rat_from_string(json.at("tau").get<std::string>()) == report.tau);
}

TEST_CASE("cones subcommand accepts hyperplane centers of any degree", "[cli]") {
    CliResult result = run({"cones", "--n", "3", "--d", "1", "--k", "1", "--r", "7"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    CHECK(json.at("mov") == Json::parse("[[1,0],[7,-1]]"));
    CHECK(json.at("eff") == Json::parse("[[0,1],[1,-1]]"));
}

TEST_CASE("validation failures exit with code 2 and a named error", "[cli]") {
    CliResult result = run({"beta", "--n", "4", "--d", "5", "--k", "1", "--r", "1"});
    CHECK(result.code == 2);
    CHECK(result.err.find("NotFano") != std::string::npos);

    result = run({"cones", "--n", "2", "--d", "1", "--k", "1", "--r", "1"});
    CHECK(result.code == 2);
    CHECK(result.err.find("RangeError") != std::string::npos);

    result = run({"cones", "--n", "4", "--d", "2", "--k", "1", "--r", "3"});
    CHECK(result.code == 2);
    CHECK(result.err.find("ForcedContainment") != std::string::npos);

    result = run({"volume", "--n", "6", "--d", "3", "--k", "2", "--r", "2",
                  "--pi-in-x"});
    CHECK(result.code == 2);
    CHECK(result.err.find("UnsupportedFamily") != std::string::npos);
}

TEST_CASE("usage problems exit with code 2", "[cli]") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"beta", "--n", "3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("volume subcommand serializes rationals as p/q strings", "[cli]") {
    CliResult result = run({"volume", "--n", "3", "--d", "2", "--k", "1", "--r", "1"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    CHECK(json.at("tau") == "2");
    CHECK(json.at("antican_degree") == "46");
    CHECK(json.at("coeffs") == Json::parse(R"(["46","-15","-6","1"])"));

    result = run({"volume", "--n", "3", "--d", "2", "--k", "1", "--r", "1", "--approx"});
    Json approx = Json::parse(result.out);
    CHECK(approx.at("antican_degree_approx") == 46.0);
}

TEST_CASE("classify output is byte-stable and matches the golden file", "[cli]") {
    CliResult first = run({"classify", "--k", "1"});
    CliResult second = run({"classify", "--k", "1"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    std::ifstream golden(std::string(MORI_GOLDEN_DIR) + "/classify_k1.csv",
                         std::ios::binary);
    std::ostringstream buffer;
    buffer << golden.rdbuf();
    CHECK(first.out == buffer.str());
}

TEST_CASE("models subcommand round-trips its config", "[cli]") {
    CliResult result = run({"models", "--n", "5", "--d", "1", "--k", "2", "--r", "3"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    CHECK(json.at("thetaType") == "SQM");
    BlowupConfig echoed = config_from_json(json.at("config"));
    CHECK(echoed == validate(5, 1, 2, 3, false));
    CHECK(json.at("singularities").at(0).at("codimension") == 3);
    CHECK(json.at("fibration").at("trichotomy") == "FanoFibration");
}

TEST_CASE("cones JSON re-parses into the producing types", "[cli]") {
    CliResult result = run({"cones", "--n", "4", "--d", "5", "--k", "1", "--r", "2",
                            "--pi-in-x"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    BlowupConfig cfg = config_from_json(json.at("config"));
    ConeSet cones = cone_set(cfg);
    CHECK(cone_from_json(json.at("nef")) == cones.nef);
    CHECK(cone_from_json(json.at("mov")) == cones.mov);
    CHECK(cone_from_json(json.at("eff")) == cones.eff);
    REQUIRE(json.at("chambers").size() == 3);
    bool saw_antiflip = false;
    for (const auto& wall : json.at("walls"))
        if (wall.at("kind") == "SQM" && wall.at("sqmKind") == "AntiFlip")
            saw_antiflip = true;
    CHECK(saw_antiflip);
}

TEST_CASE("toric subcommand lists sections consistently", "[cli]") {
    CliResult result = run({"toric", "--n", "3", "--k", "1", "--r", "2",
                            "--sections", "2", "0"});
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    REQUIRE(json.contains("sections"));
    CHECK(json.at("sections").at("count").get<std::size_t>() ==
          json.at("sections").at("monomials").size());
    CHECK(BigInt(json.at("sections").at("count").get<long long>()) ==
          count_sections(3, 1, 2, 2, 0));
}

TEST_CASE("sweep subcommand writes the CSV columns", "[cli]") {
    CliResult result = run({"sweep", "--n-max", "6"});
    REQUIRE(result.code == 0);
    CHECK(result.out.rfind("n,d,k,S_num,S_den,unstable,closed_form_agrees\n", 0) == 0);
    CHECK(result.out.find("5,1,3,4,3,true,true") != std::string::npos);
    CHECK(result.err.find("sweep summary") != std::string::npos);
}

TEST_CASE("tables subcommand prints exact profiles", "[cli]") {
    CliResult result =
        run({"tables", "--variant", "I", "--d", "2", "--n-min", "3", "--n-max", "4"});
    REQUIRE(result.code == 0);
    CHECK(result.out.find("3,1/9,3/43") != std::string::npos);
}

TEST_CASE("cox subcommand reads config and data files", "[cli]") {
    std::string config_path = "cli_cox_config.json";
    std::string data_path = "cli_cox_data.json";
    {
        std::ofstream config(config_path);
        config << R"({"n":3,"d":1,"k":1,"r":1,"piContained":true})";
        std::ofstream data(data_path);
        data << R"({"h":"x0","F":["0","1"],"g":"0"})";
    }
    CliResult result = run({"cox", "--config", config_path, "--data", data_path});
    std::remove(config_path.c_str());
    std::remove(data_path.c_str());
    REQUIRE(result.code == 0);
    Json json = Json::parse(result.out);
    CHECK(json.at("fprime") == "x4");
    CHECK(json.at("relation") == "u*z - x0");
    CHECK(json.at("grading").at("relation") == Json::parse("[1,0]"));
    CHECK(json.at("decompositionValid") == true);
}

TEST_CASE("output lands in --out when requested", "[cli]") {
    std::string path = "cli_out_test.json";
    CliResult result = run({"volume", "--n", "3", "--d", "3", "--k", "1",
                            "--r", "1", "--out", path});
    REQUIRE(result.code == 0);
    CHECK(result.out.empty());
    std::ifstream file(path);
    REQUIRE(file.good());
    Json json;
    file >> json;
    file.close();
    std::remove(path.c_str());
    CHECK(json.at("tau") == "1");
    CHECK(json.at("antican_degree") == "18");
}
