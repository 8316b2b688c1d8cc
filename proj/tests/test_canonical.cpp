#include "doctest.h"

#include "glspec/canonical.hpp"
#include "glspec/enumerate.hpp"
#include "glspec/families.hpp"
#include "glspec/graph.hpp"
#include "glspec/graph6.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

using namespace glspec;

namespace {

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

std::multiset<int> degree_multiset(const Graph& g) {
    auto d = g.degrees();
    return {d.begin(), d.end()};
}

}  // namespace

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(424242);
    for (const char* name : {"U(6)", "Y(8,3)", "K(2,3)", "K23Star", "G1", "H(7,1)", "Q1"}) {
        Graph g = make(name);
        std::string form = canonical_form(g);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(canonical_form(permute(g, random_perm(g.order(), rng))) == form);
    }
}

TEST_CASE("canonical graph is isomorphic to its input") {
    std::mt19937 rng(11);
    for (const char* name : {"C(7)", "K24Sub", "FamilyB(7,2,2)", "F0"}) {
        Graph g = make(name);
        Graph c = canonical_graph(g);
        CHECK(c.order() == g.order());
        CHECK(c.size() == g.size());
        CHECK(degree_multiset(c) == degree_multiset(g));
        CHECK(girth(c) == girth(g));
        CHECK(is_isomorphic(c, g));
    }
}

TEST_CASE("canonical form separates known nonisomorphic pairs") {
    // same order, size and degree sequence
    CHECK(canonical_form(make("C(6)")) !=
          canonical_form(disjoint_union(make("C(3)"), make("C(3)"))));
    // two caterpillars, same degree sequence, leaf at distance 1 vs 2
    Graph cat1(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 6}});
    Graph cat2(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}});
    CHECK(degree_multiset(cat1) == degree_multiset(cat2));
    CHECK_FALSE(is_isomorphic(cat1, cat2));
    CHECK(canonical_form(cat1) != canonical_form(cat2));
    CHECK_FALSE(is_isomorphic(make("Y(8,3)"), make("Y(8,4)")));
}

TEST_CASE("isomorphism fixtures") {
    CHECK(is_isomorphic(make("C(4)"), make("K(2,2)")));
    CHECK(is_isomorphic(make("P(1)"), Graph(1)));
    CHECK_FALSE(is_isomorphic(make("P(4)"), make("K(1,3)")));
    CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
    std::mt19937 rng(5);
    Graph g = make("R2");
    CHECK(is_isomorphic(g, permute(g, random_perm(g.order(), rng))));
}

TEST_CASE("enumerated representatives are canonically labeled") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : connected_graphs(n)) CHECK(emit_graph6(g) == canonical_form(g));
}

TEST_CASE("canonical forms of an enumeration level are pairwise distinct") {
    std::set<std::string> forms;
    for (const Graph& g : connected_graphs(6)) forms.insert(canonical_form(g));
    CHECK(forms.size() == 112);
}

TEST_CASE("canonical order bound") {
    CHECK_THROWS_AS(canonical_form(Graph(17)), std::invalid_argument);
    CHECK(canonical_form(Graph(16)).size() > 0);
}
