#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "walkmat/corpus.hpp"
#include "walkmat/graph6.hpp"

#include "fixtures.hpp"

using walkmat::Graph;
using walkmat::parse_graph6;
using walkmat::write_graph6;

TEST_CASE("known graph6 strings decode to the expected graphs") {
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == fixtures::complete(2));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("Bw") == fixtures::complete(3));
    CHECK(parse_graph6("Dhc") == fixtures::cycle(5));
}

TEST_CASE("known graphs encode to the expected strings") {
    CHECK(write_graph6(Graph(0)) == "?");
    CHECK(write_graph6(Graph(1)) == "@");
    CHECK(write_graph6(fixtures::complete(2)) == "A_");
    CHECK(write_graph6(fixtures::complete(3)) == "Bw");
    CHECK(write_graph6(fixtures::cycle(5)) == "Dhc");
}

TEST_CASE("write then parse round-trips every graph on at most 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : walkmat::enumerate_graphs(n))
            CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);  // oversized
    CHECK_THROWS_AS(parse_graph6("A!"), std::invalid_argument);   // byte < 63
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
    CHECK_THROWS_AS(parse_graph6("B\x7f"), std::invalid_argument);
}

TEST_CASE("padding bits beyond the triangle must be zero") {
    // n = 2 has one triangle bit; the remaining five bits of the payload
    // byte are padding. '_' = 100000 is K_2, anything with low bits set is
    // not a valid encoding.
    CHECK_THROWS_AS(parse_graph6("A`"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A~"), std::invalid_argument);
}

TEST_CASE("writer refuses graphs beyond the short form") {
    CHECK_THROWS_AS(write_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 files read back in order with line numbers on failure") {
    std::string path = "graph6_roundtrip.g6";
    {
        std::ofstream out(path);
        out << write_graph6(fixtures::cycle(5)) << "\n"
            << write_graph6(fixtures::complete(4)) << "\n";
    }
    auto graphs = walkmat::read_graph6_file(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == fixtures::cycle(5));
    CHECK(graphs[1] == fixtures::complete(4));

    {
        std::ofstream out(path);
        out << "Bw\n\nBw\n";
    }
    CHECK_THROWS_WITH_AS(static_cast<void>(walkmat::read_graph6_file(path)),
                         doctest::Contains(":2:"), std::runtime_error);

    {
        std::ofstream out(path);
        out << "Bw\nB!\n";
    }
    CHECK_THROWS_WITH_AS(static_cast<void>(walkmat::read_graph6_file(path)),
                         doctest::Contains(":2:"), std::runtime_error);
    std::remove(path.c_str());

    CHECK_THROWS_AS(static_cast<void>(walkmat::read_graph6_file("missing.g6")),
                    std::runtime_error);
}
