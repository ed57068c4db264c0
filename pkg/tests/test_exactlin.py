"""Exact rational linear algebra: golden examples, properties, sympy cross-check."""

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalcone.exactlin import MatrixQ, as_scalar, kernel_basis, rank, rref, solve, solve_many

F = Fraction


def test_as_scalar_accepts_exact_values():
    assert as_scalar(3) == F(3)
    assert as_scalar(F(1, 2)) == F(1, 2)
    assert isinstance(as_scalar(7), F)


def test_as_scalar_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5)
    with pytest.raises(TypeError):
        MatrixQ.from_rows([[0.5]])


def test_from_rows_ragged_raises():
    with pytest.raises(ValueError):
        MatrixQ.from_rows([[1, 2], [3]])


def test_empty_shapes():
    m = MatrixQ.from_rows([], cols=3)
    assert (m.rows, m.cols) == (0, 3)
    assert rank(m) == 0
    assert len(kernel_basis(m)) == 3
    n = MatrixQ.from_columns([], rows=2)
    assert (n.rows, n.cols) == (2, 0)
    assert kernel_basis(n) == []


def test_rref_golden_example():
    m = MatrixQ.from_rows([[2, 4], [1, 2]])
    reduced, pivots = rref(m)
    assert reduced == MatrixQ.from_rows([[1, 2], [0, 0]])
    assert pivots == (0,)
    assert rank(m) == 1


def test_rref_idempotent_on_example():
    m = MatrixQ.from_rows([[0, 2, 1], [3, 1, 0], [3, 3, 1]])
    reduced, pivots = rref(m)
    again, pivots2 = rref(reduced)
    assert again == reduced
    assert pivots2 == pivots


def _det_by_permutations(m):
    assert m.rows == m.cols
    total = F(0)
    for perm in itertools.permutations(range(m.rows)):
        sign = F(1)
        for i in range(m.rows):
            for j in range(i + 1, m.rows):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = F(1)
        for i, j in enumerate(perm):
            prod *= m.at(i, j)
        total += sign * prod
    return total


def test_vandermonde_rank_with_determinant_oracle():
    # nodes t = 0, 1, 2: the Vandermonde determinant is (1-0)(2-0)(2-1) = 2
    m = MatrixQ.from_rows([[1, t, t * t] for t in (F(0), F(1), F(2))])
    assert _det_by_permutations(m) == F(2)
    assert rank(m) == 3
    assert kernel_basis(m) == []


def test_kernel_canonical_form():
    m = MatrixQ.from_rows([[1, 2]])
    assert kernel_basis(m) == [(F(-2), F(1))]
    z = MatrixQ.zeros(2, 3)
    basis = kernel_basis(z)
    assert basis == [
        (F(1), F(0), F(0)),
        (F(0), F(1), F(0)),
        (F(0), F(0), F(1)),
    ]


def test_solve_prefers_zero_free_variables():
    m = MatrixQ.from_rows([[2, 4]])
    assert solve(m, (F(6),)) == (F(3), F(0))


def test_solve_inconsistent_returns_none():
    m = MatrixQ.from_rows([[1, 1], [1, 1]])
    assert solve(m, (F(1), F(2))) is None


def test_solve_identity():
    m = MatrixQ.identity(3)
    rhs = (F(5), F(-1), F(1, 3))
    assert solve(m, rhs) == rhs


def test_solve_many_mixed():
    m = MatrixQ.from_rows([[1, 0], [1, 0]])
    results = solve_many(m, [(F(2), F(2)), (F(1), F(0))])
    assert results[0] == (F(2), F(0))
    assert results[1] is None


def test_solve_shape_mismatch_raises():
    m = MatrixQ.identity(2)
    with pytest.raises(ValueError):
        solve(m, (F(1),))


def _random_matrix(rng, max_dim=6):
    r = rng.randint(1, max_dim)
    c = rng.randint(1, max_dim)
    entries = [
        [F(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(c)] for _ in range(r)
    ]
    return MatrixQ.from_rows(entries)


def test_rank_and_kernel_against_sympy():
    rng = random.Random(20260819)
    for _ in range(30):
        m = _random_matrix(rng)
        sm = sympy.Matrix(m.rows, m.cols, [sympy.Rational(x) for row in m.row_lists() for x in row])
        assert rank(m) == sm.rank()
        basis = kernel_basis(m)
        assert len(basis) == len(sm.nullspace())
        for vec in basis:
            assert m.mul_vec(vec) == tuple([F(0)] * m.rows)


def test_point_evaluation_rank_invariant():
    # r <= d+1 distinct evaluation points give rank r; one more point adds nothing
    rng = random.Random(97)
    for _ in range(20):
        d = rng.randint(0, 5)
        pts = rng.sample(range(-9, 10), d + 2)
        pts = [F(p, 2) for p in pts]
        for r in (1, d + 1, d + 2):
            rows = [[t**j for j in range(d + 1)] for t in pts[:r]]
            assert rank(MatrixQ.from_rows(rows)) == min(r, d + 1)


fractions_st = st.fractions(min_value=-9, max_value=9, max_denominator=5)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(min_value=1, max_value=max_dim))
    c = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(
        st.lists(
            st.lists(fractions_st, min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
    return MatrixQ.from_rows(entries)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + len(kernel_basis(m)) == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    zero = tuple([F(0)] * m.rows)
    for vec in kernel_basis(m):
        assert m.mul_vec(vec) == zero


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    reduced, pivots = rref(m)
    assert rref(reduced) == (reduced, pivots)
    assert list(pivots) == sorted(pivots)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.lists(fractions_st, min_size=1, max_size=5))
def test_solve_recovers_consistent_systems(m, coeffs):
    vec = tuple((coeffs * m.cols)[: m.cols])
    rhs = m.mul_vec(vec)
    found = solve(m, rhs)
    assert found is not None
    assert m.mul_vec(found) == rhs
