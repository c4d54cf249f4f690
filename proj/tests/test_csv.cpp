#include <doctest.h>

#include <random>

#include "hirenet/csv.hpp"
#include "hirenet/errors.hpp"

using namespace hirenet;

TEST_CASE("csv basic parsing") {
    auto rows = parse_csv("a,b,c\n1,2,3\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
    CHECK(rows[1] == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("csv quoting, CRLF and blank lines") {
    auto rows = parse_csv("name,note\r\n\"Doe, J\",\"said \"\"hi\"\"\"\r\n\n\"multi\nline\",x\n");
    REQUIRE(rows.size() == 3);
    CHECK(rows[1][0] == "Doe, J");
    CHECK(rows[1][1] == "said \"hi\"");
    CHECK(rows[2][0] == "multi\nline");
    CHECK_THROWS_AS(parse_csv("\"open"), SchemaError);
}

TEST_CASE("csv empty trailing fields survive") {
    auto rows = parse_csv("a,,c\n,,\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].size() == 3);
    CHECK(rows[1] == std::vector<std::string>{"", "", ""});
}

TEST_CASE("csv field escaping round-trips") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 12);
    const std::string alphabet = "ab,\"\n x";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> fields;
        for (int f = 0; f < 3; ++f) {
            std::string s;
            for (int i = len(rng); i > 0; --i) s += alphabet[pick(rng)];
            fields.push_back(s);
        }
        // A row of entirely empty fields parses as a blank line; skip that case.
        if (fields[0].empty() && fields[1].empty() && fields[2].empty()) continue;
        std::string line;
        append_csv_row(line, fields);
        auto rows = parse_csv(line);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0] == fields);
    }
}
