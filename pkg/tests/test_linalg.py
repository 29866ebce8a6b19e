import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mskit import linalg
from mskit.fields import PrimeField, QQ
from fractions import Fraction

F5 = PrimeField(5)


def q(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_echelon_solve_and_contains():
    ech = linalg.Echelon(QQ, 3)
    assert ech.add(q([[1, 2, 3]])[0]) is None
    assert ech.add(q([[0, 1, 1]])[0]) is None
    coeffs = ech.add(q([[1, 3, 4]])[0])
    assert coeffs == [Fraction(1), Fraction(1)]
    assert ech.contains(q([[2, 5, 7]])[0])
    assert not ech.contains(q([[0, 0, 1]])[0])
    assert ech.solve(q([[1, 4, 5]])[0]) == [Fraction(1), Fraction(2), Fraction(0)]


def test_relations_reproduce_dependencies():
    rows = q([[1, 0], [0, 1], [1, 1], [2, 1]])
    rels = linalg.relations(rows, QQ, 2)
    assert len(rels) == 2
    for rel in rels:
        total = [QQ.zero, QQ.zero]
        for c, row in zip(rel, rows):
            total = [t + c * x for t, x in zip(total, row)]
        assert not any(total)


def test_intersect_rowspaces():
    a = q([[1, 0, 0], [0, 1, 0]])
    b = q([[0, 1, 0], [0, 0, 1]])
    meet = linalg.intersect_rowspaces(a, b, QQ, 3)
    assert meet == q([[0, 1, 0]])
    assert linalg.intersect_rowspaces(q([[1, 0, 0]]), q([[0, 0, 1]]), QQ, 3) == []


def test_solve_left():
    rows = q([[1, 1, 0], [0, 1, 1]])
    sol = linalg.solve_left(rows, q([[1, 3, 2]])[0], QQ, 3)
    assert sol == [Fraction(1), Fraction(2)]
    assert linalg.solve_left(rows, q([[0, 0, 5]])[0], QQ, 3) is None


def test_canonical_is_reduced():
    basis = linalg.row_basis(q([[2, 4, 0], [1, 2, 1]]), QQ, 3)
    assert basis == q([[1, 2, 0], [0, 0, 1]])


@settings(max_examples=60)
@given(st.integers(0, 10_000))
def test_rank_nullity_mod5(seed):
    rng = random.Random(seed)
    nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
    rows = [[F5.of(rng.randint(0, 4)) for _ in range(ncols)] for _ in range(nrows)]
    r = linalg.rank(rows, F5, ncols)
    rels = linalg.relations(rows, F5, ncols)
    assert r + len(rels) == nrows
    for rel in rels:
        total = [F5.zero] * ncols
        for c, row in zip(rel, rows):
            for j, x in enumerate(row):
                total[j] = total[j] + c * x
        assert not any(total)


@settings(max_examples=40)
@given(st.integers(0, 10_000))
def test_intersection_is_in_both(seed):
    rng = random.Random(seed)
    ncols = rng.randint(1, 5)
    a = [[F5.of(rng.randint(0, 4)) for _ in range(ncols)] for _ in range(rng.randint(1, 4))]
    b = [[F5.of(rng.randint(0, 4)) for _ in range(ncols)] for _ in range(rng.randint(1, 4))]
    ech_a = linalg.Echelon(F5, ncols)
    ech_b = linalg.Echelon(F5, ncols)
    for r in a:
        ech_a.add(r)
    for r in b:
        ech_b.add(r)
    for v in linalg.intersect_rowspaces(a, b, F5, ncols):
        assert ech_a.contains(v) and ech_b.contains(v)
    # dimension formula: dim(A) + dim(B) = dim(A+B) + dim(A&B)
    both = linalg.rank(a + b, F5, ncols)
    meet = len(linalg.intersect_rowspaces(a, b, F5, ncols))
    assert ech_a.rank + ech_b.rank == both + meet
