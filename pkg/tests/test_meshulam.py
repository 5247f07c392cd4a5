"""Domination bounds and the delete/contract game."""

import random

import pytest

from mtk.core import Hypergraph, independence_complex, mask_of
from mtk.extval import INF
from mtk.matroid import MatroidSystem
from mtk.meshulam import (
    FrugalSequence,
    delete_contract_certificate,
    frugal_certificate,
    gamma_e_graph,
    gamma_e_hyper,
    is_dominating,
)
from mtk.topology import eta_h
from mtk.coloring import delta_rank
from mtk.verify import rand_matroid


def test_gamma_e_graph_examples():
    c4 = Hypergraph(4, [[0, 1], [1, 2], [2, 3], [0, 3]])
    assert gamma_e_graph(c4) == 1
    assert gamma_e_graph(Hypergraph(3, [])) == INF
    assert gamma_e_graph(Hypergraph(2, [[0, 1]])) == 1
    # path on 4 vertices needs the middle edge
    p4 = Hypergraph(4, [[0, 1], [1, 2], [2, 3]])
    assert gamma_e_graph(p4) == 1


def test_gamma_e_hyper_examples():
    assert gamma_e_hyper(Hypergraph(2, [[0, 1]])) == 1
    tri = Hypergraph(3, [[0, 1, 2]])
    assert gamma_e_hyper(tri) == 2
    assert eta_h(independence_complex(tri)) == 2
    assert gamma_e_hyper(Hypergraph(3, [[0, 1]])) == INF  # vertex 2 stranded


def test_frugal_sequence_invariants():
    seq = FrugalSequence(edges=(mask_of([0, 1]), mask_of([1, 2, 3])), value=2)
    assert seq.union() == mask_of([0, 1, 2, 3])
    with pytest.raises(ValueError):
        # second edge contributes only one new vertex: not frugal
        FrugalSequence(edges=(mask_of([0, 1]), mask_of([1, 2])), value=2)
    with pytest.raises(ValueError):
        FrugalSequence(edges=(mask_of([0, 1]),), value=5)


def test_frugal_certificate_matches_value():
    rng = random.Random(31)
    for _ in range(60):
        n = rng.randint(2, 6)
        edges = {
            frozenset(rng.sample(range(n), rng.randint(1, min(3, n))))
            for _ in range(rng.randint(1, 5))
        }
        h = Hypergraph(n, [list(e) for e in edges])
        g = gamma_e_hyper(h)
        cert = frugal_certificate(h)
        if g == INF:
            assert cert is None
        else:
            assert cert.value == g
            assert is_dominating(h, cert.union())


def test_delete_contract_examples():
    b, seq = delete_contract_certificate(Hypergraph(2, [[0, 1]]))
    assert b == 1 and seq.edges == (3,)
    # circuit hypergraph of the rank-2 uniform matroid on 3 elements: the
    # triple is the only circuit, and I(CIRC(M)) = M has eta = rank = 2
    circuits = Hypergraph(3, [[0, 1, 2]])
    b, seq = delete_contract_certificate(circuits)
    assert b >= 1
    assert eta_h(independence_complex(circuits)) == 2
    # the three pairs are the circuits of the rank-1 uniform matroid
    pairs = Hypergraph(3, [[0, 1], [0, 2], [1, 2]])
    b2, _ = delete_contract_certificate(pairs)
    assert b2 >= 1
    assert eta_h(independence_complex(pairs)) == 1
    b, seq = delete_contract_certificate(Hypergraph(3, []))
    assert b == INF and seq is None


def test_delete_contract_sandwich():
    # gamma_e <= game bound <= eta_h(I(H)); the game sequence is frugal
    # and dominating.  (The bound can exceed gamma_e: the game cannot
    # always steer to the cheapest sequence.)
    rng = random.Random(32)
    for _ in range(80):
        n = rng.randint(2, 6)
        edges = {
            frozenset(rng.sample(range(n), rng.randint(1, min(4, n))))
            for _ in range(rng.randint(1, 6))
        }
        h = Hypergraph(n, [list(e) for e in edges])
        bound, seq = delete_contract_certificate(h)
        gamma = gamma_e_hyper(h)
        eta = eta_h(independence_complex(h))
        if bound == INF:
            assert eta == INF
        else:
            assert eta == INF or eta >= bound
            assert gamma != INF and gamma <= bound
            if seq is not None:
                assert seq.value == bound
                assert is_dominating(h, seq.union())


def test_greedy_strategy_still_valid():
    rng = random.Random(33)
    for _ in range(30):
        n = rng.randint(3, 6)
        edges = {
            frozenset(rng.sample(range(n), rng.randint(2, min(3, n))))
            for _ in range(rng.randint(1, 5))
        }
        h = Hypergraph(n, [list(e) for e in edges])
        b_greedy, _ = delete_contract_certificate(h, strategy="greedy")
        b_full, _ = delete_contract_certificate(h, strategy="exhaustive")
        eta = eta_h(independence_complex(h))
        assert b_greedy == INF or eta == INF or eta >= b_greedy
        if b_full != INF and b_greedy != INF:
            assert b_greedy <= b_full


def test_two_k_minus_one_end_to_end():
    # |V| / eta_h(cap L) <= (2k-1) max delta_r(M_i) via H = union of circuits
    rng = random.Random(34)
    for _ in range(12):
        n = rng.randint(2, 6)
        k = rng.randint(1, 3)
        ms = [rand_matroid(rng, n, loopless=True) for _ in range(k)]
        system = MatroidSystem(ms)
        c = system.intersection_complex()
        eta = eta_h(c)
        if eta == INF:
            continue
        lhs = n
        bound = (2 * k - 1) * max(delta_rank(m).finite_value() for m in ms)
        assert lhs <= bound * eta
