import random

import pytest
from hypothesis import given, settings, strategies as st

from qpcat.ginzburg import ginzburg
from qpcat.gqa import AlgElement, enumerate_paths, make_quiver, path_str
from qpcat.jacobian import (BOUND_EXCEEDED, COMPLETE, FINITE, INFINITE, UNDETERMINED,
                            RelationError, ScopeError, complete_rewriting,
                            degree_zero_quiver, degree_zero_relations, h0, h0_multiply,
                            quotient_algebra)
from qpcat.potential import Potential

from oracles import (count_paths, dense_quotient_dims, element_to_words, random_potential,
                     random_quiver)


def test_relations_of_example(example_pres, example_quiver):
    rels = degree_zero_relations(example_pres)
    assert rels == [AlgElement.of(example_quiver.path("b", "c"))]


def test_relations_classical():
    q = make_quiver([1, 2, 3], [("a", 1, 2), ("b", 3, 1), ("c", 2, 3)])
    W = Potential.from_terms(q, 3, [(1, q.path("a", "b", "c"))])
    rels = degree_zero_relations(ginzburg(W))
    assert [r.to_str(q) for r in rels] == ["bc", "ca", "ab"]


def test_relations_zero_potential(example_quiver):
    assert degree_zero_relations(ginzburg(Potential.zero(example_quiver, 4))) == []


def test_complete_single_rule(example_quiver):
    q0 = degree_zero_quiver(example_quiver)
    sys = complete_rewriting(q0, [AlgElement.of(q0.path("b", "c"))])
    assert sys.status == COMPLETE
    assert list(sys.rules) == [q0.path("b", "c")] and sys.rules[q0.path("b", "c")] == 0
    assert sys.overlaps() == []


def test_complete_empty(example_quiver):
    sys = complete_rewriting(example_quiver, [])
    assert sys.status == COMPLETE and sys.rules == {}


def test_commutative_square():
    q = make_quiver([1, 2, 3, 4], [("p1", 1, 2), ("p2", 2, 4), ("q1", 1, 3), ("q2", 3, 4)])
    rel = AlgElement.of(q.path("p2", "p1")) - AlgElement.of(q.path("q2", "q1"))
    sys = complete_rewriting(q, [rel])
    assert sys.status == COMPLETE and len(sys.rules) == 1
    res = quotient_algebra(q, [rel])
    arrows = {a.name: (a.source, a.target) for a in q.arrows}
    oracle = dense_quotient_dims(arrows, q.vertices, [element_to_words(rel)], 3)
    assert sum(oracle.values()) == res.dimension == 9


def test_non_parallel_relation_rejected(example_quiver):
    q = example_quiver
    bad = AlgElement.of(q.path("b")) + AlgElement.of(q.path("c"))
    with pytest.raises(RelationError):
        complete_rewriting(q, [bad])


def test_h0_example(example_pres):
    res = h0(example_pres)
    assert res.verdict == FINITE and res.dimension == 5
    assert res.basis_strings() == ["e1", "e2", "e3", "b", "c"]


def test_h0_acyclic_zero_potential():
    q = make_quiver([1, 2, 3], [("x", 2, 1), ("y", 3, 2)])
    arrows = {a.name: (a.source, a.target) for a in q.arrows}
    for m in (1, 2, 3):
        res = h0(ginzburg(Potential.zero(q, m + 2)))
        assert res.verdict == FINITE
        assert res.dimension == count_paths(arrows, q.vertices, 3) == 6


def test_h0_loop_is_infinite():
    q = make_quiver([1], [("l", 1, 1)])
    res = h0(ginzburg(Potential.zero(q, 3)))
    assert res.verdict == INFINITE and res.witness == q.path("l")


def test_h0_linear_potential_kills_vertex():
    q = make_quiver([1, 2], [("l", 1, 1), ("x", 1, 2)])
    res = h0(ginzburg(Potential.from_terms(q, 3, [(1, q.path("l"))])))
    assert res.verdict == FINITE and res.basis_strings() == ["e2"]


def test_h0_scope_guard():
    q = make_quiver([1], [("l", 1, 1, -2)])
    with pytest.raises(ScopeError):
        h0(ginzburg(Potential.zero(q, 4)))


def test_h0_undetermined_on_tiny_bounds():
    q = make_quiver([1], [("x", 1, 1), ("y", 1, 1)])
    W = Potential.from_terms(q, 3, [(1, q.path("x", "x", "x")), (1, q.path("y", "y", "y")),
                                    (-1, q.path("x", "y", "x", "y"))])
    assert h0(ginzburg(W), max_basis=3).verdict == UNDETERMINED
    assert h0(ginzburg(W), max_steps=1).verdict == UNDETERMINED
    assert h0(ginzburg(W), max_steps=1).system.status == BOUND_EXCEEDED


def test_multiply_example(example_pres, example_quiver):
    res = h0(example_pres)
    q = example_quiver
    b, c, e1 = q.path("b"), q.path("c"), q.idempotent("1")
    assert h0_multiply(res, b, c) == 0
    assert h0_multiply(res, e1, e1) == AlgElement.of(e1)
    assert h0_multiply(res, e1, b) == AlgElement.of(b)


def test_multiply_a3():
    q = make_quiver([1, 2, 3], [("x", 2, 1), ("y", 3, 2)])
    res = h0(ginzburg(Potential.zero(q, 3)))
    assert h0_multiply(res, q.path("x"), q.path("y")) == AlgElement.of(q.path("x", "y"))
    assert "x y" not in res.basis_strings() and "xy" in res.basis_strings()


# -- properties

def _random_case(seed, homogeneous=True):
    rng = random.Random(seed)
    q = random_quiver(rng, rng.randint(1, 4), rng.randint(1, 6))
    W = random_potential(rng, q, 3, lengths=(2, 3, 4), homogeneous_length=homogeneous)
    return q, ginzburg(W)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_oracle_equivalence(seed):
    q, P = _random_case(seed)
    res = h0(P, max_steps=100, max_basis=2000)
    if res.system.status != COMPLETE:
        return
    arrows = {a.name: (a.source, a.target) for a in q.arrows}
    oracle = dense_quotient_dims(arrows, q.vertices, [element_to_words(r) for r in res.relations], 5)
    irreducible = [p for p in enumerate_paths(q, 5) if not res.system.is_reducible(p)]
    mine = {L: sum(1 for p in irreducible if len(p) == L) for L in range(6)}
    assert mine == oracle
    if res.verdict == FINITE and max(len(p) for p in res.basis) <= 5:
        assert res.dimension == sum(oracle.values())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_confluence_and_idempotence(seed):
    q, P = _random_case(seed, homogeneous=False)
    res = h0(P, max_steps=60, max_basis=2000)
    sys = res.system
    if sys.status == COMPLETE:
        assert sys.is_confluent()
    for lead, tail in sys.rules.items():
        assert all(sys.key(p) < sys.key(lead) for p in tail)
    for p in enumerate_paths(q, 4):
        nf = sys.reduce(AlgElement.of(p))
        assert sys.reduce(nf) == nf


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_monotone_stability(seed):
    q, P = _random_case(seed, homogeneous=False)
    small = h0(P, max_steps=15, max_basis=200)
    big = h0(P, max_steps=60, max_basis=2000)
    if small.verdict != UNDETERMINED:
        assert big.verdict == small.verdict
        assert big.basis == small.basis


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_multiplication_associative(seed):
    q, P = _random_case(seed)
    res = h0(P, max_steps=100, max_basis=15)
    if res.verdict != FINITE:
        return
    B = res.basis

    def mul(x, y):
        out = AlgElement()
        for p, a in x.items():
            for r, b in y.items():
                out = out + a * b * h0_multiply(res, p, r)
        return out

    for x in B:
        for y in B:
            for z in B:
                X, Y, Z = (AlgElement.of(t) for t in (x, y, z))
                assert mul(mul(X, Y), Z) == mul(X, mul(Y, Z))


def test_basis_closed_under_subpaths(example_pres):
    res = h0(example_pres)
    basis = set(res.basis)
    q = res.quiver
    for p in res.basis:
        for k in range(1, len(p)):
            assert q.path(*p.arrows[k:]) in basis and q.path(*p.arrows[:k]) in basis
    assert all(path_str(p) for p in basis)
