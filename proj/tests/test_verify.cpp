#include "doctest.h"

#include "glspec/canonical.hpp"
#include "glspec/families.hpp"
#include "glspec/graph.hpp"
#include "glspec/graph6.hpp"
#include "glspec/spectra.hpp"
#include "glspec/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

using namespace glspec;

TEST_CASE("girth bound on single graphs") {
    GirthBoundResult r = check_girth_bound(make("K(2,3)"), 1);
    CHECK(r.n == 5);
    CHECK(r.girth_value == 4);
    CHECK(r.count == 1);
    CHECK(r.bound == 1);
    CHECK(r.holds);
    CHECK(r.is_equality);

    r = check_girth_bound(make("Y(9,3)"), 2);
    CHECK(r.girth_value == 7);
    CHECK(r.count == 2);
    CHECK(r.bound == 2);
    CHECK(r.is_equality);

    r = check_girth_bound(make("K(3,4)"), 3);
    CHECK(r.count == 3);
    CHECK(r.bound == 3);
    CHECK(r.is_equality);

    r = check_girth_bound(make("U(6)"), 1);
    CHECK(r.is_equality);

    r = check_girth_bound(make("K(2,6)"), 1);  // m[7,8] = 1 below the bound 4
    CHECK(r.count == 1);
    CHECK(r.bound == 4);
    CHECK(r.holds);
    CHECK_FALSE(r.is_equality);

    r = check_girth_bound(make("K24Minus"), 1);
    CHECK(r.holds);
    CHECK_FALSE(r.is_equality);
}

TEST_CASE("girth bound preconditions") {
    CHECK_THROWS_AS(check_girth_bound(make("C(6)"), 1), std::invalid_argument);  // n = g
    CHECK_THROWS_AS(check_girth_bound(make("K(5)"), 1), std::invalid_argument);  // girth 3
    CHECK_THROWS_AS(check_girth_bound(make("P(6)"), 1), std::invalid_argument);  // acyclic
    CHECK_THROWS_AS(check_girth_bound(disjoint_union(make("C(4)"), Graph(1)), 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_girth_bound(make("K(2,3)"), 0), std::invalid_argument);
    CHECK_THROWS_AS(check_girth_bound(make("K(2,3)"), 2), std::invalid_argument);  // k > n-g
    CHECK_THROWS_AS(check_girth_bound(make("U(7)"), 3), std::invalid_argument);    // k > n-g
}

TEST_CASE("equality sweep, k=1") {
    TheoremReport r = exhaustive_equality_search(5, 1);
    CHECK(r.theorem_id == "GEN_K");
    CHECK(r.parameters.at("n") == 5);
    CHECK(r.parameters.at("k") == 1);
    CHECK(r.violations.empty());
    CHECK(r.match);
    CHECK_FALSE(r.open_equality_class);
    CHECK(r.expected_witnesses == std::vector<std::string>{"K(2,3)", "U(5)"});
    REQUIRE(r.equality_witnesses.size() == 2);
    CHECK(r.equality_witnesses == r.expected_canonical);

    r = exhaustive_equality_search(6, 1);
    CHECK(r.match);
    CHECK(r.expected_witnesses == std::vector<std::string>{"U(6)"});
    REQUIRE(r.equality_witnesses.size() == 1);
    CHECK(parse_graph6(r.equality_witnesses[0]) == canonical_graph(make("U(6)")));
}

TEST_CASE("equality sweep, k=2") {
    TheoremReport r = exhaustive_equality_search(6, 2);
    CHECK(r.match);
    CHECK(r.violations.empty());
    CHECK(r.expected_witnesses == std::vector<std::string>{"K(2,4)", "K23Star"});
    CHECK(r.equality_witnesses.size() == 2);
    // every reported witness really attains equality
    for (const auto& g6 : r.equality_witnesses) {
        GirthBoundResult check = check_girth_bound(parse_graph6(g6), 2);
        CHECK(check.is_equality);
    }
}

TEST_CASE("equality sweep, open k=3") {
    TheoremReport r = exhaustive_equality_search(7, 3);
    CHECK(r.open_equality_class);
    CHECK(r.violations.empty());
    CHECK(r.match);  // only violations decide for k >= 3
    CHECK(r.expected_witnesses.empty());
    std::string k34 = canonical_form(make("K(3,4)"));
    CHECK(std::find(r.equality_witnesses.begin(), r.equality_witnesses.end(), k34) !=
          r.equality_witnesses.end());
}

TEST_CASE("sweeps are deterministic across job counts") {
    CHECK(exhaustive_equality_search(6, 1, 4).to_json() ==
          exhaustive_equality_search(6, 1, 1).to_json());
    CHECK(exhaustive_thr(5, 3).to_json() == exhaustive_thr(5, 1).to_json());
}

TEST_CASE("report json is well formed") {
    auto j = nlohmann::json::parse(exhaustive_equality_search(5, 1).to_json());
    CHECK(j["theorem_id"] == "GEN_K");
    CHECK(j["parameters"]["n"] == 5);
    CHECK(j["match"] == true);
    CHECK(j["violations"].is_array());
    auto t = nlohmann::json::parse(exhaustive_thr(5).to_json());
    CHECK(t["theorem_id"] == "THR_G3");
    CHECK(t["sections"].size() == 6);
    auto l = nlohmann::json::parse(lemma_suite(3).to_json());
    CHECK(l["all_pass"] == true);
    CHECK(l["results"].is_array());
    auto y = nlohmann::json::parse(y1_factorization_report(7).to_json());
    CHECK(y["pass"] == true);
}

TEST_CASE("girth-3 classification") {
    Classification c = classify_girth3(make("K(6)"), ThrWhich::MULT_N);
    CHECK(c.label == ClassificationLabel::Kn);
    CHECK(c.m == 5);
    c = classify_girth3(make("K(6)"), ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::Kn);
    c = classify_girth3(delete_edges(make("K(6)"), {{2, 4}}), ThrWhich::MULT_N);
    CHECK(c.label == ClassificationLabel::Kn_minus_e);
    CHECK(c.m == 4);
    c = classify_girth3(make("FamilyA(7,2)"), ThrWhich::MULT_N);
    CHECK(c.label == ClassificationLabel::THREE_JOIN);
    CHECK(c.m == 4);
    CHECK(c.matched == "K(4)v3K1");
    c = classify_girth3(make("KnMinusStar(7,3)"), ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::KN_MINUS_STAR);
    CHECK(c.m == 5);
    c = classify_girth3(make("H(6,1)"), ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::HA);
    CHECK(c.m == 3);
    c = classify_girth3(make("H(6)"), ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::H);
    c = classify_girth3(make("FamilyB(6,2,2)"), ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::B);
    CHECK(c.m == 3);
    // girth 3 but generic: tadpole C3 with a tail
    Graph tadpole(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}});
    c = classify_girth3(tadpole, ThrWhich::TOP_INTERVAL);
    CHECK(c.label == ClassificationLabel::OTHER);
    CHECK(c.matched.empty());

    CHECK_THROWS_AS(classify_girth3(make("C(5)"), ThrWhich::MULT_N), std::invalid_argument);
    CHECK_THROWS_AS(classify_girth3(make("K(4)"), ThrWhich::MULT_N), std::invalid_argument);
    CHECK_THROWS_AS(classify_girth3(disjoint_union(make("C(3)"), make("C(3)")),
                                    ThrWhich::MULT_N),
                    std::invalid_argument);
}

TEST_CASE("girth-3 exhaustive characterization, small orders") {
    for (int n : {5, 6}) {
        ThrReport r = exhaustive_thr(n);
        CHECK(r.n == n);
        CHECK(r.match);
        REQUIRE(r.sections.size() == 6);
        for (const auto& sec : r.sections) {
            CHECK(sec.match);
            CHECK(sec.observed == sec.expected_canonical);
        }
        // the two drop=1 sections both contain exactly the complete graph
        CHECK(r.sections[0].observed == std::vector<std::string>{canonical_form(make(
                                            FamilySpec{"K", {n}}))});
    }
    CHECK_THROWS_AS(exhaustive_thr(4), std::invalid_argument);
}

TEST_CASE("exploratory remark sweep") {
    TheoremReport r = exploratory_y1_search(7);
    CHECK(r.theorem_id == "Y1_UNIQUE");
    CHECK(r.violations.empty());
    CHECK(r.expected_witnesses == std::vector<std::string>{"Y(7,1)"});
    CHECK(r.match);
    r = exploratory_y1_search(6);
    CHECK(r.violations.empty());
    CHECK(r.expected_witnesses.empty());
}

TEST_CASE("double-pendant cycle factorization") {
    for (int n = 6; n <= 9; ++n) {
        Y1Report r = y1_factorization_report(n);
        CHECK(r.divisible);
        CHECK(r.recursion_identity);
        CHECK(r.factor_match);
        CHECK(r.odd_mu2_match);
        CHECK(r.pass);
        CHECK(verify_y1_factorization(n));
    }
    CHECK_THROWS_AS(y1_factorization_report(5), std::invalid_argument);
    CHECK_THROWS_AS(y1_factorization_report(13), std::invalid_argument);
}

TEST_CASE("lemma suite at a small bound") {
    LemmaSuiteReport r = lemma_suite(5);
    CHECK(r.n_max == 5);
    CHECK(r.all_pass);
    const char* ids[] = {"mu1_max_degree",
                         "mu1_edge_degree_bound",
                         "cycle_path_closed_forms",
                         "weyl_inequality",
                         "cauchy_interlacing",
                         "edge_interlacing",
                         "mu2_second_degree",
                         "cut_edge_recursion",
                         "complement_eigenvalue_pairing",
                         "multiplicity_at_one",
                         "algebraic_connectivity_bound"};
    REQUIRE(r.results.size() == std::size(ids));
    for (size_t i = 0; i < std::size(ids); ++i) {
        CHECK(r.results[i].id == ids[i]);
        CHECK(r.results[i].pass);
        CHECK(r.results[i].counterexamples.empty());
        // the second-degree bound needs two far-apart high-degree vertices,
        // impossible in a connected graph below order 6
        if (r.results[i].id == "mu2_second_degree")
            CHECK(r.results[i].cases_checked == 0);
        else
            CHECK(r.results[i].cases_checked > 0);
    }
    auto complement_result = std::find_if(r.results.begin(), r.results.end(), [](const auto& x) {
        return x.id == "complement_eigenvalue_pairing";
    });
    CHECK(complement_result->cases_checked == 29);
    auto closed = std::find_if(r.results.begin(), r.results.end(),
                               [](const auto& x) { return x.id == "cycle_path_closed_forms"; });
    CHECK(closed->cases_checked == 20);  // n = 3..12, cycle and path each
    CHECK_THROWS_AS(lemma_suite(1), std::invalid_argument);
    CHECK_THROWS_AS(lemma_suite(10), std::invalid_argument);
}
