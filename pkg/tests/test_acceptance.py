"""Exit criteria. Each ``test_criterion_<k>_*`` function checks one criterion.

Run with ``pytest tests/test_acceptance.py``; a per-criterion PASS/FAIL
summary is printed at the end of the session.
"""
import random
import time
from fractions import Fraction

import pytest

from flagfaces.complexes import Graph, boundary_of_simplex, clique_fvector, fvector_of_complex
from flagfaces.harness import CorpusSpec, enumerate_labeled_graphs, run_corpus
from flagfaces.inequalities import (
    alpha_sequence,
    check_inequalities,
    dseries_from_alpha,
    dseries_from_f_direct,
    lemma_vs,
    log_route_power_sums,
    theorem_lhs,
    v_by_peeling,
)
from flagfaces.series import from_coeffs, int_pow
from flagfaces.symfun import binomial, power_sums

from oracles import roots_to_elementary, sympy_peel, sympy_q


def newton_table(s1, s2, s3, s4):
    return [
        s1,
        s1**2 - 2 * s2,
        s1**3 - 3 * s2 * s1 + 3 * s3,
        s1**4 - 4 * s2 * s1**2 + 4 * s3 * s1 + 2 * s2**2 - 4 * s4,
    ]


def test_criterion_1_newton_table():
    rng = random.Random(1)
    t0 = time.perf_counter()
    for _ in range(20):
        s = [rng.randint(-9, 9) for _ in range(4)]
        assert power_sums(s, 4) == newton_table(*s)
    assert time.perf_counter() - t0 < 1.0


def test_criterion_2_root_oracle():
    rng = random.Random(2)
    t0 = time.perf_counter()
    for _ in range(200):
        gamma = [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
        e = roots_to_elementary(gamma, 8)
        assert power_sums(e, 8) == [sum(g**d for g in gamma) for d in range(1, 9)]
    assert time.perf_counter() - t0 < 5.0


@pytest.fixture(scope="module")
def six_vertex_runs():
    spec = CorpusSpec("exhaustive", 6, max_n=10)
    return {w: run_corpus(spec, w) for w in (1, 4)}


def test_criterion_3_triple_route_single_thread(six_vertex_runs):
    r = six_vertex_runs[1]
    assert r.total == 32768
    assert r.route_disagreements == 0
    assert r.violations == []
    assert r.non_integral == 0
    assert all(v >= 0 for v in r.max_v_seen.values())
    assert r.elapsed < 180.0


def test_criterion_3_triple_route_four_workers(six_vertex_runs):
    r = six_vertex_runs[4]
    assert r.total == 32768 and r.ok
    assert r.elapsed < 60.0


def test_criterion_3_per_graph_nonnegative_integers():
    # the aggregate above only records failures; this re-checks every value directly
    for g in enumerate_labeled_graphs(6):
        rep = check_inequalities(clique_fvector(g), 10)
        assert rep.routes_agree
        for rec in rep.records:
            assert rec.lhs >= 0 and isinstance(rec.v, int) and rec.v >= 0


def test_criterion_4_series_identity():
    rng = random.Random(4)
    t0 = time.perf_counter()
    for _ in range(500):
        f = [rng.randint(0, 30) for _ in range(rng.randint(0, 7))]
        assert dseries_from_alpha(alpha_sequence(f, 16)) == dseries_from_f_direct(f, 16)
        assert dseries_from_f_direct(f, 16).order == 16
    assert time.perf_counter() - t0 < 10.0


def _sign(x):
    return (x > 0) - (x < 0)


def test_criterion_5_closed_forms():
    rng = random.Random(5)
    for _ in range(100):
        f = [rng.randint(0, 50) for _ in range(rng.randint(1, 6))]
        f0, f1, f2 = (f + [0, 0, 0])[:3]
        lhs = theorem_lhs(alpha_sequence(f, 3), 3)
        assert lhs[1] == 2 * (binomial(f0, 2) - f1)
        # f_2 >= C(f0,3) - (f0-2)(C(f0,2) - f1)
        slack = f2 - (binomial(f0, 3) - (f0 - 2) * (binomial(f0, 2) - f1))
        assert _sign(lhs[2]) == _sign(slack)


@pytest.mark.parametrize("m", range(1, 11))
def test_criterion_6_complete_graph_collapse(m):
    f = clique_fvector(Graph.complete(m))
    rep = check_inequalities(f, 12, 12)
    assert rep.q == int_pow(from_coeffs([1, 1] + [0] * 11), m)
    assert rep.q.coeffs == tuple(binomial(m, k) for k in range(13))
    assert [r.v for r in rep.records] == [m] + [0] * 11
    assert rep.routes_agree
    assert lemma_vs(rep.q, 12) == [m] + [0] * 11
    assert v_by_peeling(rep.q).values == [m] + [0] * 11


def test_criterion_7_empty_triangle():
    f = fvector_of_complex(boundary_of_simplex(3))
    assert f == (3, 3)
    # brute-force symbolic route first
    assert sympy_peel(sympy_q(f, 6), 6)[2] == -1
    rep = check_inequalities(f, 10)
    assert [r.n for r in rep.violations()] == [3]
    assert rep.records[2].lhs == -3 and rep.records[2].v == -1


@pytest.mark.parametrize("k", range(3, 9))
def test_criterion_7_boundary_fails_by_k(k):
    rep = check_inequalities(fvector_of_complex(boundary_of_simplex(k)), k)
    assert rep.violations(), f"no violation for boundary_of_simplex({k}) at any N <= {k}"


def test_criterion_8_log_route():
    for m in range(0, 6):
        for g in enumerate_labeled_graphs(m):
            rep = check_inequalities(clique_fvector(g), 10)
            assert log_route_power_sums(rep.q, 10) == power_sums(rep.q.coeffs[1:], 10)


def test_criterion_9_determinism(six_vertex_runs):
    spec = CorpusSpec("random", 8, edge_prob=Fraction(1, 3), trials=200, seed=7, max_n=10)
    a = run_corpus(spec, 1).to_json()
    b = run_corpus(spec, 1).to_json()
    c = run_corpus(spec, 4).to_json()
    assert a == b == c
    assert six_vertex_runs[1].to_json() == six_vertex_runs[4].to_json()
    fam = CorpusSpec("family", 3, max_n=3)
    assert run_corpus(fam, 1).to_json() == run_corpus(fam, 4).to_json()
