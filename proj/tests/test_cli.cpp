#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "eisen/cli.hpp"

using namespace eisen;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("theorem-level pole listing") {
    auto res = run({"poles", "--n", "1", "--m1", "3", "--m2", "2"});
    CHECK(res.code == 0);
    CHECK(res.out.find("5/4 (simple)") != std::string::npos);
    CHECK(res.out.find("3/4 (simple)") != std::string::npos);
}

TEST_CASE("orbit-data json carries the worked support matrix") {
    auto res = run({"orbit-data", "--partition", "4,2,1", "--json"});
    REQUIRE(res.code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["command"] == "orbit-data");
    CHECK(doc["payload"]["k"] == 2);
    CHECK(doc["payload"]["m"] == Json::array({2, 1}));
    CHECK(doc["payload"]["n"] == Json::array({1, 0}));
    auto alpha = doc["payload"]["support_matrix"];
    REQUIRE(alpha.size() == 7);
    CHECK(alpha[1][0] == 1);
    CHECK(alpha[4][1] == 1);
    CHECK(alpha[5][2] == 1);
    CHECK(alpha[6][4] == 1);
    int ones = 0;
    for (const auto& row : alpha)
        for (const auto& v : row) ones += v.get<int>();
    CHECK(ones == 4);
}

TEST_CASE("json output round-trips byte-identically") {
    for (auto args : {std::vector<std::string>{"orbit-data", "--partition", "4,2,1", "--json"},
                      std::vector<std::string>{"constant-term", "--m1", "2", "--m2", "2",
                                               "--json"},
                      std::vector<std::string>{"poles", "--m1", "2", "--m2", "1", "--at",
                                               "3/4", "--json"},
                      std::vector<std::string>{"characters", "--m1", "2", "--m2", "1", "--n",
                                               "1", "--json"}}) {
        std::ostringstream out, err;
        REQUIRE(run_cli(args, out, err) == 0);
        Json doc = Json::parse(out.str());
        CHECK(doc.dump(2) + "\n" == out.str());
    }
}

TEST_CASE("text and json renderings agree on verdicts") {
    auto text = run({"satake", "--n", "2", "--m1", "2", "--m2", "2", "--i", "1"});
    auto json = run({"satake", "--n", "2", "--m1", "2", "--m2", "2", "--i", "1", "--json"});
    CHECK(text.code == 0);
    CHECK(json.code == 0);
    CHECK(text.out.find("coincide") != std::string::npos);
    CHECK(Json::parse(json.out)["payload"]["coincide"] == true);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"poles"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"orbit-data", "--partition", "1,2,3"}).code == 2);  // increasing
    CHECK(run({"poles", "--m1", "2", "--m2", "1", "--at", "x"}).code == 2);
    CHECK(run({"orbit", "--n", "1", "--m1", "2", "--m2", "2", "--i", "5"}).code == 2);
}

TEST_CASE("jordan command on files") {
    const char* good_path = "cli_jordan_good.txt";
    {
        std::ofstream f(good_path);
        f << "3 3\n0 0 0\n1 0 0\n0 1 0\n";
    }
    auto res = run({"jordan", "--matrix", good_path});
    CHECK(res.code == 0);
    CHECK(res.out.find("3") != std::string::npos);

    const char* bad_path = "cli_jordan_bad.txt";
    {
        std::ofstream f(bad_path);
        f << "2 2\n1 0\n0 1\n";
    }
    CHECK(run({"jordan", "--matrix", bad_path}).code == 1);
    CHECK(run({"jordan", "--matrix", "no_such_file.txt"}).code == 2);
    std::remove(good_path);
    std::remove(bad_path);
}

TEST_CASE("linkage and characters commands") {
    auto res = run({"linkage", "--m1", "2", "--m2", "2", "--max", "4"});
    CHECK(res.code == 0);
    CHECK(res.out.find("1/2, 1") != std::string::npos);

    auto chars = run({"characters", "--m1", "1", "--m2", "1", "--n", "1", "--s0", "1/2"});
    CHECK(chars.code == 0);
    CHECK(chars.out.find("trivial") != std::string::npos);
}

TEST_CASE("verify runs a small sweep") {
    auto res = run({"verify", "--suite", "satake", "--max-size", "4", "--json"});
    CHECK(res.code == 0);
    Json doc = Json::parse(res.out);
    CHECK(doc["payload"]["all_pass"] == true);
    CHECK(doc["payload"]["suites"][0]["failures"].empty());
}
