#include "cotangent/cli.hpp"
#include "cotangent/fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace cotangent;
using namespace cotangent::cli;
namespace fx = cotangent::fixtures;

namespace {

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("analyze reports the cone", "[cli]") {
    const auto r = cmd_analyze_document(fx::cone(6).json());
    CHECK(r.exit_code() == 0);
    CHECK(r.document["schema"] == "1");
    CHECK(r.document["multiplicity"] == "6");
    CHECK(r.document["tdims"]["3"] == "30");
    CHECK(r.document["tdims"]["4"] == "110");
    CHECK(r.document["t2"]["exact"] == true);
    const auto text = r.text();
    CHECK(contains(text, "multiplicity: 6"));
    CHECK(contains(text, "dim T^3: 30"));
    CHECK(contains(text, "dim T^4: 110"));
    CHECK(contains(text, "dim T^2: 15 (exact)"));
}

TEST_CASE("text and JSON carry the same numbers", "[cli]") {
    for (const auto& data : {fx::star(3, {3, 3, 3}), fx::chain({3, 2, 3}), fx::d4_generalization(4)}) {
        const auto r = cmd_analyze_document(data.json());
        REQUIRE(r.exit_code() == 0);
        const auto text = r.text();
        for (const auto& [i, v] : r.document["tdims"].items())
            CHECK(contains(text, "dim T^" + i + ": " + v.get<std::string>() + "\n"));
        CHECK(contains(text, "multiplicity: " + r.document["multiplicity"].get<std::string>() + "\n"));
        CHECK(contains(text, "sum (b_i-1): " + r.document["gmd"]["sum_b_minus_1"].get<std::string>() + "\n"));
    }
}

TEST_CASE("analyze exit codes", "[cli]") {
    CHECK(cmd_analyze_document(fx::star(2, {3, 3, 3, 3}).json()).exit_code() == 3);
    CHECK(cmd_analyze_document(fx::d4().json()).exit_code() == 4);
    const auto bad = cmd_analyze_document(fx::star(2, {2, 2, 2, 2}).json());
    CHECK(bad.exit_code() == 2);
    CHECK(bad.document["error"]["code"] == "not-negative-definite");
    CHECK(cmd_analyze_document("{").exit_code() == 2);
    CHECK(cmd_analyze("/nonexistent/graph.json").exit_code() == 2);
}

TEST_CASE("series command", "[cli]") {
    const auto r = cmd_series(4, 3);
    CHECK(r.exit_code() == 0);
    CHECK(r.document["c"] == nlohmann::json::array({"3", "6", "8"}));
    CHECK(r.document["p"][1] == "4");
    CHECK(r.document["p"][2] == "3");
    CHECK(contains(r.text(), "[2] 3"));
    CHECK(cmd_series(2, 3).exit_code() == 2);
    CHECK(cmd_series(5, 0).exit_code() == 2);
}

TEST_CASE("oracle command", "[cli]") {
    const auto r = cmd_oracle(2, 3, Coefficients::trivial, false);
    CHECK(r.exit_code() == 0);
    CHECK(r.document["verdict"] == "MATCH");
    CHECK(r.document["brute_force"] == "2");
    CHECK(contains(r.text(), "verdict: MATCH"));

    CHECK(cmd_oracle(3, 2, Coefficients::regular, false).document["verdict"] == "MATCH");
    CHECK_FALSE(cmd_oracle(2, 2, Coefficients::trivial, true).document.contains("verdict"));
    CHECK(cmd_oracle(4, 9, Coefficients::trivial, false).exit_code() == 5);
    CHECK(cmd_oracle(0, 2, Coefficients::trivial, false).exit_code() == 2);
}

TEST_CASE("selftest passes and is deterministic", "[cli][acceptance]") {
    const auto a = cmd_selftest();
    const auto b = cmd_selftest();
    CHECK(a.exit_code() == 0);
    CHECK(a.text() == b.text());
    CHECK(a.document["criteria"].size() == 11);
}

TEST_CASE("a corrupted closed form fails its criterion by name", "[cli][acceptance]") {
    AcceptanceOptions opt;
    opt.forms.f[0] = [](const BigInt& d) { return BigRational(2 * d - 3); };
    const auto r = cmd_selftest(opt);
    CHECK(r.exit_code() == 1);
    const auto text = r.text();
    CHECK(contains(text, "FAIL [1] f-table reproduction"));
    CHECK(contains(text, "PASS [2] c closed forms"));
    CHECK(contains(text, "10/11 criteria passed"));
}
