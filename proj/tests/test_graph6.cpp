#include "doctest.h"

#include "glspec/enumerate.hpp"
#include "glspec/graph.hpp"
#include "glspec/graph6.hpp"

#include <stdexcept>
#include <string>

using namespace glspec;

namespace {

std::string error_text(const std::string& input) {
    try {
        parse_graph6(input);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("graph6 fixtures") {
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("A_") == Graph(2, std::vector<Edge>{{0, 1}}));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("D?{") == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(parse_graph6("Bw") == Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK(parse_graph6("BW") == Graph(3, {{0, 2}, {1, 2}}));
    CHECK(emit_graph6(Graph(2, std::vector<Edge>{{0, 1}})) == "A_");
    CHECK(emit_graph6(Graph(0)) == "?");
    CHECK(emit_graph6(Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})) == "D?{");
}

TEST_CASE("graph6 header accepted") {
    CHECK(parse_graph6(">>graph6<<A_") == Graph(2, std::vector<Edge>{{0, 1}}));
    CHECK(parse_graph6(">>graph6<<?") == Graph(0));
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK(error_text("") == "graph6: empty input at byte 0");
    CHECK(error_text(">>graph6<<") == "graph6: empty input at byte 10");
    CHECK(error_text("A") == "graph6: input truncated at byte 1");
    CHECK(error_text("A__") == "graph6: trailing data at byte 2");
    CHECK(error_text("A ") == "graph6: invalid data byte at byte 1");
    CHECK(error_text(" _") == "graph6: invalid order byte at byte 0");
    CHECK(error_text("A`") == "graph6: nonzero padding bits at byte 1");
    CHECK(error_text("~??") == "graph6: orders above 62 unsupported at byte 0");
    CHECK(error_text(">>graph6<<A") == "graph6: input truncated at byte 11");
}

TEST_CASE("graph6 round trip over all small connected graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) CHECK(parse_graph6(emit_graph6(g)) == g);
}

TEST_CASE("graph6 round trip at the order boundary") {
    Graph big(62, {{0, 61}, {30, 31}});
    CHECK(parse_graph6(emit_graph6(big)) == big);
}
