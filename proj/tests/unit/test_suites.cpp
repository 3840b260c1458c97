#include <doctest.h>

#include "wcl/errors.hpp"
#include "wcl/suites.hpp"

using namespace wcl;

TEST_CASE("config grammar") {
    const Config c = Config::parse(
        "# top\n"
        "profile = quick\n"
        "\n"
        "[ccr]\n"
        "N = 32   # trailing comment\n"
        "[square-function]\n"
        "s = 1, 1.5,2\n");
    CHECK(c.get("profile", "") == "quick");
    CHECK(c.get_int("ccr.N", 0) == 32);
    CHECK(c.get_int("ccr.pairs", 7) == 7);
    CHECK(c.get_doubles("square-function.s", {}) == std::vector<double>{1.0, 1.5, 2.0});
    CHECK_THROWS_AS(Config::parse("[oops\n"), ParseError);
    CHECK_THROWS_AS(Config::parse("novalue\n"), ParseError);
    CHECK_THROWS_AS(Config::parse("N = abc\n").get_int("N", 0), ParseError);
    CHECK_THROWS_AS(Config::parse("N = 1.5\n").get_int("N", 0), ParseError);
    CHECK_THROWS_AS(Config::load("/nonexistent.cfg"), IoError);
}

TEST_CASE("suite names") {
    CHECK(suite_names().size() == 12);
    CHECK(is_suite("all"));
    CHECK(is_suite("kernel-bounds"));
    CHECK_FALSE(is_suite("bogus"));
    CHECK_THROWS_AS(run_suite("bogus", Config{}, Profile::quick), UsageError);
    CHECK(profile_from_string("full") == Profile::full);
    CHECK_THROWS_AS(profile_from_string("slow"), ParseError);
}

TEST_CASE("suite reports are deterministic") {
    const Config c = Config::parse("[sigma]\nsamples = 10\n");
    const auto a = run_suite("sigma", c, Profile::quick);
    const auto b = run_suite("sigma", c, Profile::quick);
    CHECK(a.passed());
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_text().rfind("sigma.grid.N = 64\n", 0) == 0);
}
