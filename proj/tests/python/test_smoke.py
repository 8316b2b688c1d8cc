import math

import glspec


def test_graph_basics():
    g = glspec.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.order == 4
    assert g.size == 4
    assert g.degree(0) == 2
    assert glspec.girth(g) == 4
    assert glspec.is_connected(g)
    assert glspec.is_isomorphic(g, glspec.make("C(4)"))


def test_families_and_graph6():
    g = glspec.make("K(2,3)")
    s = glspec.emit_graph6(g)
    assert glspec.parse_graph6(s) == g
    assert glspec.canonical_form(g) == glspec.canonical_form(glspec.make("K(2,3)"))
    assert "Y" in glspec.family_names()
    assert glspec.girth(glspec.make("P(5)")) is None


def test_spectra():
    g = glspec.make("K(2,3)")
    assert glspec.charpoly(g) == [0, 60, -92, 51, -12, 1]
    assert glspec.charpoly_text(g) == "x^5 - 12x^4 + 51x^3 - 92x^2 + 60x"
    ev = glspec.eigenvalues(g)
    for got, want in zip(ev, [5, 3, 2, 2, 0]):
        assert math.isclose(got, want, abs_tol=1e-9)
    assert glspec.m_interval(g, "[4,5]") == 1
    assert glspec.m_interval(g, "[n-1,n]") == 1
    assert glspec.mu_k_compare(g, 2, 3) == "equal"
    assert glspec.mu_k_compare(g, 2, "7/2") == "less"
    assert abs(glspec.mu_k(g, 1) - 5) < 1e-9


def test_verify():
    r = glspec.check_girth_bound(glspec.make("K(2,3)"), 1)
    assert r["holds"] and r["is_equality"]
    assert r["count"] == r["bound"] == 1

    sweep = glspec.sweep_gen(5, 1)
    assert sweep["match"] is True
    assert sweep["violations"] == []
    assert len(sweep["equality_witnesses"]) == 2

    assert glspec.verify_y1_factorization(7)

    cls = glspec.classify_girth3(glspec.make("K(6)"), "mult_n")
    assert cls["label"] == "Kn"
    assert cls["m"] == 5

    suite = glspec.lemma_suite(3)
    assert suite["all_pass"] is True
