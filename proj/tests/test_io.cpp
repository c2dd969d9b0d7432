#include "support.hpp"

#include "mpj/errors.hpp"
#include "mpj/io.hpp"

#include <doctest.h>

using namespace mpj;

namespace {

const char* kSl2 = R"({
  "name": "sl2", "dim": 3, "basis": ["h", "e", "f"],
  "bracket": [
    {"i": 0, "j": 1, "terms": [{"k": 1, "c": "2"}]},
    {"i": 0, "j": 2, "terms": [{"k": 2, "c": "-2"}]},
    {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]}
  ],
  "jordan": [],
  "masa": [["1", "0", "0"]]
})";

Json sl2_json()
{
    return Json::parse(kSl2);
}

} // namespace

TEST_SUITE("io")
{
    TEST_CASE("parse a hand-written file")
    {
        const auto f = parse_algebra_file(std::string(kSl2));
        CHECK(f.name == "sl2");
        CHECK(f.algebra == lie_sl2().algebra);
        CHECK(f.masa_subspace() == lie_sl2().masa);
    }

    TEST_CASE("rationals as strings and integers")
    {
        auto j = sl2_json();
        j["bracket"][0]["terms"][0]["c"] = "4/2";
        j["bracket"][1]["terms"][0]["c"] = -2;
        CHECK(parse_algebra_file(j).algebra == lie_sl2().algebra);
        j["bracket"][1]["terms"][0]["c"] = -2.5;
        CHECK_THROWS_AS(parse_algebra_file(j), ParseError);
    }

    TEST_CASE("schema violations are parse errors")
    {
        auto expect_error = [](const std::function<void(Json&)>& edit) {
            auto j = sl2_json();
            edit(j);
            CHECK_THROWS_AS(parse_algebra_file(j), ParseError);
        };
        expect_error([](Json& j) { j.erase("masa"); });
        expect_error([](Json& j) { j["dim"] = 4; });
        expect_error([](Json& j) { j["dim"] = "3"; });
        expect_error([](Json& j) { j["basis"][1] = "h"; });
        expect_error([](Json& j) { j["bracket"][0]["i"] = 1; });          // i == j
        expect_error([](Json& j) { j["bracket"][0]["j"] = 0; j["bracket"][0]["i"] = 1; }); // i > j
        expect_error([](Json& j) { j["bracket"][0]["terms"][0]["k"] = 3; }); // out of range
        expect_error([](Json& j) { j["bracket"][0]["terms"][0]["k"] = -1; });
        expect_error([](Json& j) { j["bracket"][0]["terms"][0]["c"] = "1/0"; });
        expect_error([](Json& j) { j["bracket"].push_back(j["bracket"][0]); }); // repeated pair
        expect_error([](Json& j) { j["bracket"][0]["terms"].push_back(j["bracket"][0]["terms"][0]); });
        expect_error([](Json& j) { j["jordan"] = Json::array({{{"i", 2}, {"j", 1}, {"terms", Json::array()}}}); });
        expect_error([](Json& j) { j["masa"] = Json::array({Json::array({"1", "0", "0"}), Json::array({"2", "0", "0"})}); });
        expect_error([](Json& j) { j["masa"][0] = Json::array({"1", "0"}); });
        expect_error([](Json& j) { j = Json::array(); });
        CHECK_THROWS_AS(parse_algebra_file(std::string("{ not json")), ParseError);
        CHECK_THROWS_AS(load_algebra_file("/nonexistent/file.json"), ParseError);
    }

    TEST_CASE("Jordan diagonal entries are allowed")
    {
        auto j = sl2_json();
        j["jordan"] = Json::array({{{"i", 1}, {"j", 1}, {"terms", Json::array({{{"k", 0}, {"c", "1"}}})}}});
        const auto f = parse_algebra_file(j);
        CHECK(f.algebra.jordan_coeff(1, 1, 0) == 1);
    }

    TEST_CASE("property: algebra files round-trip")
    {
        std::mt19937_64 rng(41);
        std::vector<AlgebraFile> files;
        for (const auto& g : testing::bundled_families())
            files.push_back(to_algebra_file(g));
        for (int t = 0; t < 5; ++t) {
            auto a = testing::random_algebra(rng, 3);
            a.set_bracket(0, 1, 2, Rational(-7, 3));
            files.push_back({"random", a, {Vec{Rational(1, 2), 0, 1}}});
        }
        for (const auto& f : files) {
            const std::string text = serialize(f);
            const auto back = parse_algebra_file(text);
            CHECK(back == f);
            CHECK(serialize(back) == text);
        }
    }

    TEST_CASE("property: reports round-trip")
    {
        ReportFile r;
        r.name = "x";
        r.dim = 2;
        r.basis = {"a", "b"};
        r.axioms = {{"leibniz", {false, true, WitnessRecord{{0, 1, 1}, "defect"}}}, {"malcev_identity", {}}};
        r.non_lie_certificate = WitnessRecord{{0, 1, 2}, "J != 0"};
        r.split = SplitSection{{{"joint_eigen", {}}}, true, {{{"2"}, 1}, {{"-1/2"}, 3}}};
        DecompositionSection d;
        d.omega = {{"2"}};
        d.classes = {{{"-2"}, {"2"}}};
        d.ideals = {{{{"2"}}, 1, 2, 3, {"h", "e + f"}}};
        d.center = {};
        d.u = {"a"};
        d.verdicts = {{"direct_sum", {true, false, WitnessRecord{{}, "hypotheses unmet"}}}};
        d.components = {{{{"2"}}, 3, true, true, true, true, false}};
        d.simplicity = {true, false, false, "2 connection classes"};
        r.decomposition = d;
        r.error = "boom";
        const auto j = to_json(r);
        const auto back = parse_report(j);
        CHECK(back == r);
        CHECK(serialize(back) == serialize(r));
        CHECK(j["decomposition"]["verdicts"]["direct_sum"]["applicable"] == false);
        CHECK_FALSE(j["split"]["verdicts"]["joint_eigen"].contains("applicable"));
        CHECK_THROWS_AS(parse_report(Json::object()), ParseError);
    }
}
