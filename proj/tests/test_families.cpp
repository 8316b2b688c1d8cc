#include "doctest.h"

#include "glspec/canonical.hpp"
#include "glspec/families.hpp"
#include "glspec/graph.hpp"
#include "glspec/spectra.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace glspec;

TEST_CASE("family spec parse and text round trip") {
    FamilySpec y = FamilySpec::parse("Y(7,3)");
    CHECK(y.name == "Y");
    CHECK(y.params == std::vector<int>{7, 3});
    CHECK(y.text() == "Y(7,3)");
    FamilySpec plain = FamilySpec::parse("K23Star");
    CHECK(plain.name == "K23Star");
    CHECK(plain.params.empty());
    CHECK(plain.text() == "K23Star");
    CHECK(FamilySpec::parse("FamilyB(8, 2, 1)").params == std::vector<int>{8, 2, 1});

    CHECK_THROWS_AS(FamilySpec::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("(3)"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("Y(7,)"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("Y(7,3"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("Y(a)"), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::parse("Y(3x)"), std::invalid_argument);
}

TEST_CASE("order, size and girth fixtures") {
    struct Row {
        const char* spec;
        int order;
        int size;
        std::optional<int> girth_value;
    };
    const Row rows[] = {
        {"P(5)", 5, 4, std::nullopt},
        {"C(7)", 7, 7, 7},
        {"K(5)", 5, 10, 3},
        {"K(2,3)", 5, 6, 4},
        {"K(1,4)", 5, 4, std::nullopt},
        {"K(3,4)", 7, 12, 4},
        {"U(6)", 6, 6, 5},
        {"UPrime(7)", 7, 7, 5},
        {"Y(7,3)", 7, 7, 5},
        {"Y(9,1)", 9, 9, 7},
        {"H(6)", 6, 10, 3},
        {"H(7,1)", 7, 15, 3},
        {"KnMinusStar(6,2)", 6, 13, 3},
        {"KnMinusStar(6,1)", 6, 14, 3},
        {"FamilyA(7,2)", 7, 18, 3},
        {"FamilyB(6,1,1)", 6, 13, 3},
        {"FamilyC(6,3,2)", 6, 10, 3},
        {"StarPlus(3)", 5, 4, std::nullopt},
        {"StarPlusPlus(2)", 5, 4, std::nullopt},
        {"StarDiamond(2,3)", 6, 5, std::nullopt},
        {"K23Star", 6, 7, 4},
        {"K23DoubleStar", 7, 8, 5},
        {"K23TripleStar", 8, 9, 6},
        {"F", 11, 10, std::nullopt},
        {"R1", 6, 7, 4},
        {"R2", 7, 9, 4},
        {"R3", 7, 9, 4},
        {"F0", 8, 10, 5},
        {"F1", 9, 10, 6},
        {"F2", 9, 10, 6},
        {"Q1", 9, 11, 5},
        {"Q2", 9, 11, 5},
        {"Q3", 10, 12, 6},
        {"Q4", 10, 12, 6},
        {"G1", 8, 10, 5},
        {"G2", 10, 12, 6},
        {"K24Minus", 6, 7, 4},
        {"K24Sub", 7, 9, 4},
    };
    for (const Row& row : rows) {
        CAPTURE(row.spec);
        Graph g = make(row.spec);
        CHECK(g.order() == row.order);
        CHECK(g.size() == row.size);
        CHECK(girth(g) == row.girth_value);
        CHECK(is_connected(g));
    }
}

TEST_CASE("identity coincidences between families") {
    CHECK(is_isomorphic(make("K(2,2)"), make("C(4)")));
    CHECK(is_isomorphic(make("FamilyA(7,2)"), join(make("K(4)"), Graph(3))));
    CHECK(is_isomorphic(make("KnMinusStar(7,2)"),
                        join(make("K(4)"), disjoint_union(Graph(1), make("P(2)")))));
    CHECK(is_isomorphic(make("FamilyB(7,1,1)"), join(make("K(3)"), make("C(4)"))));
    CHECK(is_isomorphic(make("H(6)"), make("FamilyC(6,4,1)")));
    CHECK(is_isomorphic(make("H(8)"), make("FamilyC(8,6,1)")));
    CHECK(is_isomorphic(make("H(6,1)"), make("FamilyC(6,3,2)")));
    CHECK(is_isomorphic(make("KnMinusStar(6,1)"), delete_edges(make("K(6)"), {{0, 1}})));
    // two drawings of the same graph
    CHECK(is_isomorphic(make("G1"), make("F0")));
    CHECK(is_isomorphic(make("G2"), make("Q3")));
    // complement views pin the deleted-edges constructions
    CHECK(is_isomorphic(complement(make("FamilyC(8,3,2)")),
                        disjoint_union(make("StarDiamond(3,2)"), Graph(2))));
    CHECK(is_isomorphic(complement(make("FamilyB(8,2,2)")),
                        disjoint_union(disjoint_union(make("K(1,2)"), make("K(1,2)")), Graph(2))));
}

TEST_CASE("distinct parameters give distinct graphs") {
    CHECK_FALSE(is_isomorphic(make("Y(8,3)"), make("Y(8,4)")));
    CHECK_FALSE(is_isomorphic(make("Q1"), make("Q2")));
    CHECK_FALSE(is_isomorphic(make("Q3"), make("Q4")));
    CHECK_FALSE(is_isomorphic(make("F1"), make("F2")));
    CHECK_FALSE(is_isomorphic(make("FamilyB(8,2,1)"), make("FamilyC(8,2,1)")));
}

TEST_CASE("parameter domains are enforced") {
    CHECK_THROWS_AS(make("P(0)"), std::invalid_argument);
    CHECK_THROWS_AS(make("C(2)"), std::invalid_argument);
    CHECK_THROWS_AS(make("K(0)"), std::invalid_argument);
    CHECK_THROWS_AS(make("K(0,3)"), std::invalid_argument);
    CHECK_THROWS_AS(make("U(3)"), std::invalid_argument);
    CHECK_THROWS_AS(make("UPrime(4)"), std::invalid_argument);
    CHECK_THROWS_AS(make("Y(5,1)"), std::invalid_argument);
    CHECK_THROWS_AS(make("Y(8,5)"), std::invalid_argument);
    CHECK(make("Y(8,4)").order() == 8);
    CHECK(make("Y(9,4)").order() == 9);
    CHECK_THROWS_AS(make("Y(9,5)"), std::invalid_argument);
    CHECK_THROWS_AS(make("H(4)"), std::invalid_argument);
    CHECK_THROWS_AS(make("H(6,2)"), std::invalid_argument);
    CHECK(make("H(8,2)").order() == 8);
    CHECK_THROWS_AS(make("KnMinusStar(6,5)"), std::invalid_argument);
    CHECK(make("KnMinusStar(6,4)").order() == 6);
    CHECK_THROWS_AS(make("FamilyA(6,1)"), std::invalid_argument);
    CHECK_THROWS_AS(make("FamilyA(6,5)"), std::invalid_argument);
    CHECK_THROWS_AS(make("FamilyB(7,3,3)"), std::invalid_argument);
    CHECK(make("FamilyB(7,3,2)").order() == 7);
    CHECK_THROWS_AS(make("FamilyC(7,2,2)"), std::invalid_argument);
    CHECK(make("FamilyC(7,2,1)").order() == 7);
    CHECK_THROWS_AS(make("FamilyC(7,6,1)"), std::invalid_argument);
    CHECK_THROWS_AS(make("StarPlus(0)"), std::invalid_argument);
    CHECK_THROWS_AS(make("StarDiamond(0,1)"), std::invalid_argument);
    CHECK_THROWS_AS(make("Nope"), std::invalid_argument);
    CHECK_THROWS_AS(make("K(1,2,3)"), std::invalid_argument);
    CHECK_THROWS_AS(make("Q1(3)"), std::invalid_argument);
}

TEST_CASE("catalog names all construct") {
    for (const std::string& name : family_names()) {
        CAPTURE(name);
        Graph g = [&] {
            if (name == "P" || name == "C" || name == "U" || name == "UPrime") return make(name + "(6)");
            if (name == "K") return make("K(4)");
            if (name == "Y") return make("Y(7,2)");
            if (name == "H") return make("H(6)");
            if (name == "KnMinusStar") return make("KnMinusStar(6,2)");
            if (name == "FamilyA") return make("FamilyA(6,2)");
            if (name == "FamilyB") return make("FamilyB(6,1,1)");
            if (name == "FamilyC") return make("FamilyC(6,2,1)");
            if (name == "StarPlus") return make("StarPlus(2)");
            if (name == "StarPlusPlus") return make("StarPlusPlus(2)");
            if (name == "StarDiamond") return make("StarDiamond(2,2)");
            return make(name);
        }();
        CHECK(g.order() >= 1);
    }
}

TEST_CASE("spectral cross checks pin the drawings") {
    // complete bipartite spectrum is known in closed form
    Graph k23 = make("K(2,3)");
    auto ev = eigenvalues_numeric(k23);
    const double expected[] = {5, 3, 2, 2, 0};
    for (int i = 0; i < 5; ++i) CHECK(ev[i] == doctest::Approx(expected[i]).epsilon(1e-9));

    Graph k34 = make("K(3,4)");
    ev = eigenvalues_numeric(k34);
    const double expected34[] = {7, 4, 4, 3, 3, 3, 0};
    for (int i = 0; i < 7; ++i) CHECK(ev[i] == doctest::Approx(expected34[i]).epsilon(1e-9));

    // Q1, full spectrum from an independent eigensolver
    const double q1[] = {4.9122291785, 4.4142135624, 4.2469796037, 2.5549581321, 2.2864620650,
                         1.5857864376, 1.1980622642, 0.8013087565, 0.0};
    ev = eigenvalues_numeric(make("Q1"));
    for (int i = 0; i < 9; ++i) CHECK(ev[i] == doctest::Approx(q1[i]).epsilon(1e-8));

    CHECK(mu_k(make("K23Star"), 2) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(mu_k(make("R1"), 2) == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(mu_k(make("G1"), 3) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(mu_k(make("G2"), 4) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(mu_k(make("F0"), 3) == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(mu_k(make("K23DoubleStar"), 2) == doctest::Approx(4.4142135624).epsilon(1e-8));
    CHECK(mu_k(make("K24Minus"), 2) == doctest::Approx(3.5719932683).epsilon(1e-8));
    CHECK(mu_k(make("Q4"), 5) == doctest::Approx(2.7458983116).epsilon(1e-8));
    CHECK(mu_k(make("Q2"), 5) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mu_k(make("Q3"), 5) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mu_k(make("F"), 2) == doctest::Approx(4.0081239102).epsilon(1e-8));
    CHECK(mu_k(make("K24Sub"), 3) == doctest::Approx(2.3819660113).epsilon(1e-8));
}
