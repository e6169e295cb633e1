#include "doctest.h"

#include "loopqkz/reproduction.hpp"
#include "loopqkz/serialize.hpp"

using namespace loopqkz;

TEST_CASE("fpl json round trip")
{
    for (const auto& c : enumerate_hvsfpl(9)) CHECK(fpl_from_json(to_json(c)) == c);
    auto j = to_json(enumerate_hvsfpl(7).front());
    j["h"] = std::string(j["h"].get<std::string>().size(), '1');
    CHECK_THROWS_AS(fpl_from_json(j), std::invalid_argument);
    CHECK_THROWS_AS(fpl_from_json(nlohmann::json{{"n", 7}}), std::invalid_argument);
    j["h"] = "01";
    CHECK_THROWS_AS(fpl_from_json(j), std::invalid_argument);
}

TEST_CASE("report json keeps witnesses of failures only")
{
    Report r;
    r.add("holds", true, "ignored");
    r.add("breaks", false, "at z = 2");
    const auto j = to_json(r);
    REQUIRE(j.size() == 2);
    CHECK_FALSE(j[0].contains("witness"));
    CHECK(j[1]["witness"] == "at z = 2");
}

TEST_CASE("loop vectors omit zero entries")
{
    const PatternBasis b(2);
    const auto j = loop_vector_json(b, {"0", "a+1"});
    CHECK(j == nlohmann::json{{"()", "a+1"}});
    CHECK_THROWS_AS(loop_vector_json(b, {"1"}), std::invalid_argument);
}

TEST_CASE("capped reproduction")
{
    ReproductionOptions opt;
    opt.max_size = 3;
    opt.fpl_max = 9;
    opt.seed = 5;
    const auto a = reproduce(opt);
    REQUIRE(a.size() == 12);
    for (const auto& r : a) {
        CAPTURE(r.id);
        CHECK(r.passed() == (r.id != 5));
    }
    CHECK_FALSE(all_passed(a));

    // Identical options give identical output.
    const auto b = reproduce(opt);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(to_json(a[k]) == to_json(b[k]));
        CHECK(summary_line(a[k]) == summary_line(b[k]));
    }

    const auto only = reproduce(opt, {8, 12});
    REQUIRE(only.size() == 2);
    CHECK(only[0].id == 8);
    CHECK(all_passed(only));

    opt.fpl_max = 8;
    CHECK_THROWS_AS(reproduce(opt), std::invalid_argument);
}
