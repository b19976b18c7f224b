#include <doctest.h>

#include <limits>
#include <string>

#include "mdcoint/config.hpp"
#include "mdcoint/format.hpp"

using namespace mdcoint;

TEST_CASE("config parses sections, comments and values") {
    const Config cfg = Config::parse_string(
        "# comment\n"
        "[data]\n"
        "monthly = a.csv\n"
        "; another comment\n"
        "label = demo country\n"
        "\r\n"
        "[transform]\n"
        "phi_annual = 0.01\n"
        "max_list = 1, 2.5, -3\n");
    CHECK(cfg.has_section("data"));
    CHECK(cfg.get("data", "monthly") == "a.csv");
    CHECK(cfg.get("data", "label") == "demo country");
    CHECK(cfg.get_double("transform", "phi_annual") == 0.01);
    CHECK(cfg.get_or("transform", "missing", "fallback") == "fallback");
    CHECK(cfg.get_int_or("transform", "absent", 7) == 7);
    const auto list = cfg.get_double_list("transform", "max_list");
    REQUIRE(list.size() == 3);
    CHECK(list[1] == 2.5);
    CHECK(list[2] == -3.0);
}

TEST_CASE("config parse errors carry line context") {
    CHECK_THROWS_AS(Config::parse_string("[data\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS(Config::parse_string("x = 1\n"), ConfigError);       // key before section
    CHECK_THROWS_AS(Config::parse_string("[s]\nnot a pair\n"), ConfigError);
    const Config cfg = Config::parse_string("[s]\nk = abc\n");
    CHECK_THROWS_AS(cfg.get_double("s", "k"), ConfigError);
    CHECK_THROWS_AS(cfg.get("s", "missing"), ConfigError);
}

TEST_CASE("config serialization round trips") {
    Config cfg;
    cfg.set("a", "x", "1");
    cfg.set("a", "y", "two");
    cfg.set("b", "z", "3.5");
    cfg.set("a", "x", "10");  // overwrite keeps position
    const Config back = Config::parse_string(cfg.to_string());
    CHECK(back.get("a", "x") == "10");
    CHECK(back.get("a", "y") == "two");
    CHECK(back.get_double("b", "z") == 3.5);
}

TEST_CASE("fixed formatting is locale-free and stable") {
    CHECK(format_fixed(1.23, 4) == "1.2300");
    CHECK(format_fixed(-0.0, 2) == "0.00");
    CHECK(format_fixed(2.5, 0) == "2");  // shortest fixed form at zero decimals
    CHECK(format_fixed(std::numeric_limits<double>::quiet_NaN(), 2) == "nan");
    CHECK(format_fixed(-std::numeric_limits<double>::infinity(), 2) == "-inf");
}

TEST_CASE("shortest formatting round-trips exactly") {
    for (double v : {0.1, 1.0 / 3.0, 12345.6789, -2.2250738585072014e-308, 0.30000000000000004}) {
        const std::string s = format_shortest(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(format_shortest(-0.0) == "0");
}
