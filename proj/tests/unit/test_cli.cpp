#include "diagdef/cli/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = diagdef::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const auto o = call(args);
    REQUIRE(o.code == 0);
    return Json::parse(o.out);
}

std::string data(const std::string& name) { return std::string(DIAGDEF_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("sphere h2 with regularity returns {x}") {
    const auto o = call({"sphere", "h2", "--cutoff", "3", "--regular"});
    CHECK(o.code == 0);
    const auto j = call_json({"sphere", "h2", "--cutoff", "3", "--regular"});
    REQUIRE(j["payload"]["basis"].size() == 1);
    CHECK(j["payload"]["basis"][0]["text"] == "x");
    CHECK(j["payload"]["basis"][0]["x_coeff"]["num"] == Json::array({"1/1"}));
    CHECK(call_json({"sphere", "h2", "--cutoff", "3"})["payload"]["dimension"] == 4);
}

TEST_CASE("weyl eta table") {
    const auto j = call_json({"weyl", "eta", "--order", "2"});
    const auto& eta = j["payload"]["eta"];
    REQUIRE(eta.size() == 2);
    CHECK(eta[0]["eta"]["terms"] == Json::parse(R"([[1, 2, "1/2"]])"));
    CHECK(eta[1]["eta"]["terms"] == Json::parse(R"([[1, 2, "-1/4"], [2, 3, "1/3"]])"));
    CHECK(j["pass"] == true);
}

TEST_CASE("groebner verdicts are payload, not failures") {
    auto j = call_json({"groebner", "run", "--lambda", "1/1"});
    CHECK(j["payload"]["specialization"]["verdict"] == "EXCEPTIONAL");
    CHECK(j["payload"]["exceptional_values"] == Json::array({"0/1", "1/1"}));
    j = call_json({"groebner", "run", "--lambda", "2"});
    CHECK(j["payload"]["specialization"]["verdict"] == "FIXED_BASIS");
    j = call_json({"groebner", "run", "--ideal", data("sphere_ideal.json")});
    CHECK(j["payload"]["leading_monomials"].size() == 6);
}

TEST_CASE("reports are byte-identical across runs") {
    const std::vector<std::string> args{"--json", "star", "check", "--kind", "moyal", "--trials", "5", "--seed", "17"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> d{"diagram", "delta2", "--spec", data("dual_to_t2_diagram.json"), "--seed", "3"};
    CHECK(call(d).out == call(d).out);
}

TEST_CASE("diagram subcommands") {
    auto j = call_json({"diagram", "nerve", "--spec", data("parallel.json"), "--maxdim", "2"});
    CHECK(j["payload"]["cohomology"] == Json::array({1, 1, 0}));
    j = call_json({"diagram", "nerve", "--spec", data("cospan.json"), "--maxdim", "1"});
    CHECK(j["payload"]["cohomology"] == Json::array({1, 0}));
    j = call_json({"diagram", "algebra", "--spec", data("dual_to_t2_algebra.json")});
    CHECK(j["payload"]["dimension"] == 8);
    CHECK(call({"diagram", "delta2", "--spec", data("dual_to_t2_diagram.json")}).code == 0);
}

TEST_CASE("w1 subcommands") {
    auto j = call_json({"w1", "reduce", "--input", data("cocycle_xy2.json"), "--cutoff", "5"});
    CHECK(j["payload"]["representative"]["terms"] == Json::parse(R"([[1, 2, "1/1"]])"));
    CHECK(j["payload"]["oracle"]["is_coboundary"] == false);
    j = call_json({"w1", "basis", "--cutoff", "4"});
    CHECK(j["payload"]["x_power_family_conflict"] == true);
    CHECK(j["payload"]["survivors"] == Json::parse("[[1, 2], [1, 3], [2, 2]]"));
}

TEST_CASE("acceptance subset") {
    const auto j = call_json({"acceptance", "--filter", "gz"});
    REQUIRE(j["payload"]["criteria"].size() == 1);
    CHECK(j["payload"]["criteria"][0]["id"] == 5);
    CHECK(call({"acceptance", "--filter", "nothing-matches"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"sphere"}).code == 2);
    CHECK(call({"sphere", "h2", "--cutoff", "x"}).code == 2);
    CHECK(call({"diagram", "nerve", "--spec", "/nonexistent.json"}).code == 2);
    CHECK(call({"groebner", "run", "--lambda", "abc"}).code == 2);
    CHECK(call({"star", "check", "--kind", "weird"}).code == 2);
    CHECK(call({"w1", "basis", "--cutoff", "2"}).code == 2);
    const auto o = call({"star", "product", "--a", "[[1,0]]", "--b", "[[0,1,1]]"});
    CHECK(o.code == 2);
    CHECK_FALSE(o.err.empty());
    CHECK(o.out.empty());
    CHECK(call({"--help"}).code == 0);
}
