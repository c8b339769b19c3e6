"""Echelon form, rank, nullspace, determinants, subspace coordinates."""

from __future__ import annotations

import pytest

from specialortho.errors import SingularMatrix
from specialortho.linalg import (
    SubspaceCoords,
    det,
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    trace,
    transpose,
)
from specialortho.scalars import ALPHA, L1, L2, L3, ONE, ZERO, rat


def test_rref_pivots():
    m = [[ONE, rat(2), rat(3)], [rat(2), rat(4), rat(6)], [ZERO, ONE, ONE]]
    R, pivots = rref(m)
    assert pivots == [0, 1]
    assert rank(m) == 2


def test_nullspace_dimension_and_membership():
    m = [[ONE, rat(2), rat(3)], [rat(2), rat(4), rat(6)], [ZERO, ONE, ONE]]
    basis = nullspace(m)
    assert len(basis) == 1
    for v in basis:
        assert all(x == ZERO for x in mat_vec(m, v))


def test_det_diagonal_and_singular():
    assert det([[L1, ZERO], [ZERO, L2]]) == L1 * L2
    assert det([[ONE, ONE], [ONE, ONE]]) == ZERO
    assert det(identity(4)) == ONE


def test_det_symbolic_3x3_matches_cofactor():
    m = [
        [L1, ONE, ZERO],
        [ALPHA, L2, ONE],
        [ONE, ZERO, L3],
    ]
    cofactor = (
        L1 * (L2 * L3 - ZERO)
        - ONE * (ALPHA * L3 - ONE)
        + ZERO
    )
    assert det(m) == cofactor


def test_det_row_swap_sign():
    m = [[ZERO, ONE], [ONE, ZERO]]
    assert det(m) == rat(-1)


def test_trace_and_transpose():
    m = [[L1, ONE], [ZERO, L2]]
    assert trace(m) == L1 + L2
    assert transpose(m) == [[L1, ZERO], [ONE, L2]]
    assert mat_mul(identity(2), m) == m


def test_subspace_coords_roundtrip():
    b1 = [ONE, ZERO, L1]
    b2 = [ZERO, ONE, L2]
    coords = SubspaceCoords([b1, b2], label="test plane")
    v = [rat(3), rat(-2), rat(3) * L1 - rat(2) * L2]
    assert coords.express(v) == [rat(3), rat(-2)]


def test_subspace_coords_outside_span():
    coords = SubspaceCoords([[ONE, ZERO, ZERO]], label="axis")
    with pytest.raises(SingularMatrix):
        coords.express([ZERO, ONE, ZERO])


def test_subspace_coords_dependent_basis():
    with pytest.raises(SingularMatrix):
        SubspaceCoords([[ONE, ZERO], [rat(2), ZERO]])
