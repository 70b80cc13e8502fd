"""Exact linear algebra: frozen examples, algebraic properties, sympy oracle."""

import random

import pytest
import sympy
from hypothesis import given, settings
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from conftest import int_matrices
from raagcov.catalog import get
from raagcov.homology import boundary_matrix
from raagcov.linalg import (
    GF,
    QQ,
    ZZ,
    EchelonReducer,
    ExactMatrix,
    kernel_basis,
    rank,
    smith_normal_form,
)


def test_rank_identity():
    assert rank(ExactMatrix.from_dense(QQ, [[1, 0], [0, 1]])) == 2


def test_rank_mod2_collapse():
    assert rank(ExactMatrix.from_dense(GF(2), [[1, 1], [1, 1]])) == 1
    assert rank(ExactMatrix.from_dense(QQ, [[1, 1], [1, 1]])) == 1


def test_rank_zero_matrix():
    assert rank(ExactMatrix(QQ, 3, 5)) == 0


def test_rank_rejects_integer_ring():
    with pytest.raises(ValueError):
        rank(ExactMatrix.from_dense(ZZ, [[2]]))


def test_kernel_single_relation():
    vecs = kernel_basis(ExactMatrix.from_dense(QQ, [[1, 1]]))
    assert len(vecs) == 1
    v = vecs[0]
    assert v[0] + v[1] == 0 and v[0] != 0


def test_kernel_identity_empty():
    assert kernel_basis(ExactMatrix.from_dense(QQ, [[1, 0], [0, 1]])) == []


def test_kernel_scaled_relation():
    vecs = kernel_basis(ExactMatrix.from_dense(QQ, [[2, 4]]))
    assert len(vecs) == 1
    v = vecs[0]
    assert 2 * v[0] + 4 * v[1] == 0


def test_snf_diag():
    assert smith_normal_form(ExactMatrix.from_dense(ZZ, [[2, 0], [0, 3]])).factors == (1, 6)
    assert smith_normal_form(ExactMatrix.from_dense(ZZ, [[2]])).factors == (2,)


def test_snf_projective_plane_boundary():
    # the degree-2 boundary of the 6-vertex projective plane: one factor 2
    rp2 = get("rp2-six-vertex")
    mat = boundary_matrix(rp2, 2, ZZ)
    assert (mat.rows, mat.cols) == (15, 10)
    form = smith_normal_form(mat)
    assert form.factors == (1,) * 9 + (2,)
    # independent oracle
    sy = sympy_snf(sympy.Matrix(mat.to_dense()), domain=sympy.ZZ)
    diag = sorted(abs(sy[i, i]) for i in range(min(sy.shape)) if sy[i, i] != 0)
    assert tuple(diag) == form.factors


@given(int_matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity_and_transpose(data):
    m = ExactMatrix.from_dense(QQ, data)
    r = rank(m)
    assert r + len(kernel_basis(m)) == m.cols
    assert rank(m.transpose()) == r
    # sympy cross-check
    assert r == sympy.Matrix(data).rank()


@given(int_matrices())
@settings(max_examples=40, deadline=None)
def test_kernel_vectors_annihilate(data):
    m = ExactMatrix.from_dense(QQ, data)
    rows = m.row_dicts()
    for vec in kernel_basis(m):
        for row in rows:
            assert sum(row.get(c, 0) * v for c, v in vec.items()) == 0


@given(int_matrices())
@settings(max_examples=40, deadline=None)
def test_fp_rank_bounded_by_rational_rank(data):
    mq = ExactMatrix.from_dense(QQ, data)
    for p in (2, 3, 5):
        mp = ExactMatrix.from_dense(GF(p), data)
        assert rank(mp) <= rank(mq)


@given(int_matrices(max_dim=4, bound=6))
@settings(max_examples=40, deadline=None)
def test_snf_matches_sympy_and_permutation_invariance(data):
    m = ExactMatrix.from_dense(ZZ, data)
    form = smith_normal_form(m)
    sy = sympy_snf(sympy.Matrix(data), domain=sympy.ZZ)
    diag = sorted(abs(sy[i, i]) for i in range(min(sy.shape)) if sy[i, i] != 0)
    assert tuple(diag) == form.factors
    # invariant under row/column permutations
    rng = random.Random(hash(str(data)) & 0xFFFF)
    rows = list(data)
    rng.shuffle(rows)
    cols = list(range(len(data[0])))
    rng.shuffle(cols)
    shuffled = [[row[c] for c in cols] for row in rows]
    assert smith_normal_form(ExactMatrix.from_dense(ZZ, shuffled)).factors == form.factors


def test_snf_divisibility_chain_random():
    rng = random.Random(7)
    for _ in range(25):
        data = [[rng.randint(-9, 9) for _ in range(rng.randint(1, 5))]]
        data += [[rng.randint(-9, 9) for _ in range(len(data[0]))]
                 for _ in range(rng.randint(0, 4))]
        factors = smith_normal_form(ExactMatrix.from_dense(ZZ, data)).factors
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0


def test_echelon_reducer_rank_and_residue():
    red = EchelonReducer(QQ)
    one = QQ.one()
    assert red.add({"a": one, "b": one})
    assert not red.add({"a": 2 * one, "b": 2 * one})
    assert red.add({"b": one})
    assert red.rank == 2
    assert red.reduce({"a": one}) == {}
    # residues are canonical: reducing twice gives the same answer
    vec = {"a": one, "c": one}
    assert red.reduce(vec) == red.reduce(dict(red.reduce(vec)))


def test_matrix_multiplication():
    a = ExactMatrix.from_dense(QQ, [[1, 2], [3, 4]])
    b = ExactMatrix.from_dense(QQ, [[0, 1], [1, 0]])
    assert (a * b).to_dense() == [[2, 1], [4, 3]]
