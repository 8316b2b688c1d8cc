"""Laplacian spectra of small graphs: exact interval counts, graph families, sweeps."""

import json as _json

from glspec._glspec import (  # noqa: F401
    Graph,
    canonical_form,
    charpoly,
    charpoly_text,
    check_girth_bound,
    classify_girth3,
    complement,
    component_count,
    disjoint_union,
    eigenvalues,
    emit_graph6,
    enumerate_connected,
    family_names,
    girth,
    is_connected,
    is_isomorphic,
    join,
    m_interval,
    make,
    mu_k,
    parse_graph6,
    verify_y1_factorization,
)
from glspec import _glspec as _core


def mu_k_compare(g, k, c):
    """Compare the k-th largest Laplacian eigenvalue with the rational c ("7/2", 4, ...)."""
    return _core.mu_k_compare(g, k, str(c))


def sweep_gen(n, k, jobs=1):
    return _json.loads(_core.sweep_gen_json(n, k, jobs))


def sweep_thr(n, jobs=1):
    return _json.loads(_core.sweep_thr_json(n, jobs))


def sweep_y1(n, jobs=1):
    return _json.loads(_core.sweep_y1_json(n, jobs))


def y1_report(n):
    return _json.loads(_core.y1_report_json(n))


def lemma_suite(n_max=7):
    return _json.loads(_core.lemma_suite_json(n_max))
