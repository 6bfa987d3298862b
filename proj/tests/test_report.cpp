#include <doctest.h>

#include <fstream>

#include <hsinteg/errors.hpp>
#include <hsinteg/report.hpp>

using namespace hsinteg;
using nlohmann::json;

namespace
{

const std::string problems_dir = HSINTEG_PROBLEMS_DIR;

json check_json(const char *file, unsigned max_level)
{
    const auto spec = load_problem_file(problems_dir + "/" + file);
    const auto problem = build_problem(spec);
    return check_report_json(spec, check_equality(problem, max_level));
}

} // namespace

TEST_SUITE("report")
{
    TEST_CASE("problem specs are strict")
    {
        const json good = {{"coefficients", "Z"}, {"variables", {"x", "y"}}, {"ideal", {"x^2 + y^3"}}};
        const auto spec = problem_spec_from_json(good);
        CHECK(spec.order == "degrevlex");
        CHECK(problem_spec_from_json(to_json(spec)).ideal == spec.ideal);

        auto extra = good;
        extra["idea"] = json::array();
        CHECK_THROWS_WITH_AS(problem_spec_from_json(extra), doctest::Contains("idea"), UsageError);
        auto missing = good;
        missing.erase("variables");
        CHECK_THROWS_AS(problem_spec_from_json(missing), UsageError);
        auto weights = good;
        weights["weights"] = {3, -2};
        CHECK_THROWS_AS(problem_spec_from_json(weights), UsageError);
    }

    TEST_CASE("malformed problem files")
    {
        const std::string path = "hsinteg_test_bad_problem.json";
        {
            std::ofstream(path) << "{\"coefficients\": \"F2\",\n \"variables\": [\"x\"],,}";
        }
        CHECK_THROWS_WITH_AS(load_problem_file(path), doctest::Contains("line 2"), ParseError);
        std::remove(path.c_str());
        CHECK_THROWS_AS(load_problem_file("/nonexistent/problem.json"), UsageError);

        ProblemSpec spec{"F2", {"x", "y"}, "degrevlex", {"x^2 + y^3", "x +"}, {}};
        CHECK_THROWS_WITH_AS(build_problem(spec), doctest::Contains("ideal[1]"), ParseError);
        spec.ideal = {"x"};
        spec.weights = std::vector<unsigned>{1};
        CHECK_THROWS_AS(build_problem(spec), UsageError);
    }

    TEST_CASE("images round-trip")
    {
        const auto spec = load_problem_file(problems_dir + "/cusp_f2.json");
        const auto problem = build_problem(spec);
        const auto r = integrate_derivation(LogDerivation::parse(problem, "x,0"), problem, 4, LiftMode::free);
        const auto j = images_to_json(r.integral);
        CHECK(j["x"][0] == "x");
        CHECK(images_from_json(j, problem.context()) == r.integral);
    }

    TEST_CASE("check reports re-verify")
    {
        const auto j = check_json("cusp_z.json", 4);
        CHECK(j["tool"] == "hsinteg");
        CHECK(j["command"] == "check");
        CHECK(j["levels"].size() == 4);
        const auto outcome = verify_report(j);
        CHECK(outcome.failures.empty());
        CHECK(outcome.certificates == 16);

        const auto jf = check_json("cusp_f2.json", 4);
        const auto of = verify_report(jf);
        CHECK(of.failures.empty());
        CHECK(of.evidence == 1);
    }

    TEST_CASE("tampered reports are rejected")
    {
        auto j = check_json("cusp_z.json", 2);
        auto &img = j["levels"][1]["certificates"][0]["images"]["x"];
        img[2] = "x*y + 1";
        CHECK_FALSE(verify_report(j).failures.empty());

        auto jf = check_json("cusp_f2.json", 2);
        jf["levels"][1]["witness"]["evidence"]["normal_form"] = json::array({"0"});
        CHECK_FALSE(verify_report(jf).failures.empty());
    }

    TEST_CASE("reports are deterministic")
    {
        for (const char *file : {"cusp_f2.json", "cusp_f3.json", "cusp_z.json", "cusp_weighted_z.json"}) {
            CHECK(check_json(file, 4).dump() == check_json(file, 4).dump());
        }
    }
}
