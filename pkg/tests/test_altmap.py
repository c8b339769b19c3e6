"""Shuffle wedge, shuffle composition, b_alt, Hodge duals vs brute force."""

from __future__ import annotations

import random

import pytest

from specialortho.altmap import (
    AltMap,
    PairingSpec,
    as_dual_element,
    b_alt,
    brute_compose,
    brute_wedge_rel,
    compose,
    from_dual_element,
    hodge_dual,
    volume_constant,
    wedge_rel,
)
from specialortho.errors import ArityMismatch, ShapeMismatch
from specialortho.exterior import QuadraticSpace, all_multi_indices, scalar_codomain
from specialortho.scalars import Frac, L1, L2, ONE, ZERO, rat


def diag_space(*qs, name="V"):
    n = len(qs)
    gram = [[qs[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    return QuadraticSpace([f"e{i+1}" for i in range(n)], gram, name=name)


def random_map(space, codomain, degree, rng, density=0.7):
    coeffs = {}
    for index in all_multi_indices(space.dim, degree):
        vec = [
            rat(rng.randint(-3, 3)) if rng.random() < density else ZERO
            for _ in range(codomain.dim)
        ]
        coeffs[index] = vec
    return AltMap(space, codomain, degree, coeffs)


@pytest.fixture(scope="module")
def K():
    return scalar_codomain()


def test_evaluate_basis_and_general_paths_agree(K):
    V = diag_space(ONE, L1, L2)
    f = AltMap(V, K, 2, {(1, 2): [rat(3)], (1, 3): [L1], (2, 3): [rat(-1)]})
    e1, e2, e3 = (V.basis_vector(i) for i in range(3))
    assert f.evaluate([e1, e2]) == [rat(3)]
    assert f.evaluate([e2, e1]) == [rat(-3)]
    assert f.evaluate([e1, e1]) == [ZERO]
    # general path on a non-basis argument
    u = [ONE, rat(2), ZERO]
    assert f.evaluate([u, e3]) == [L1 - rat(2)]
    with pytest.raises(ArityMismatch):
        f.evaluate([e1])


def test_alternation_general_path(K):
    V = diag_space(ONE, ONE, ONE, ONE)
    rng = random.Random(7)
    f = random_map(V, K, 3, rng)
    u = [rat(rng.randint(-2, 2)) for _ in range(4)]
    v = [rat(rng.randint(-2, 2)) for _ in range(4)]
    assert f.evaluate([u, v, u]) == [ZERO]
    assert f.evaluate([u, v, v]) == [ZERO]


def test_wedge_matches_brute_force_small(K):
    rng = random.Random(11)
    V = diag_space(*(ONE for _ in range(5)))
    pairing = PairingSpec.scalar_scalar(K)
    for p, q in [(1, 1), (1, 2), (2, 2), (2, 3)]:
        f = random_map(V, K, p, rng)
        g = random_map(V, K, q, rng)
        assert wedge_rel(f, g, pairing) == brute_wedge_rel(f, g, pairing)


def test_wedge_vector_valued_matches_brute_force(K):
    rng = random.Random(13)
    V = diag_space(ONE, L1, L2, ONE)
    pairing = PairingSpec.form(V, K)
    f = random_map(V, V, 1, rng)
    g = random_map(V, V, 2, rng)
    assert wedge_rel(f, g, pairing) == brute_wedge_rel(f, g, pairing)


def test_wedge_supercommutativity_scalar(K):
    rng = random.Random(17)
    V = diag_space(*(ONE for _ in range(6)))
    pairing = PairingSpec.scalar_scalar(K)
    for p, q in [(1, 2), (2, 2), (2, 3), (1, 1)]:
        f = random_map(V, K, p, rng)
        g = random_map(V, K, q, rng)
        left = wedge_rel(f, g, pairing)
        right = wedge_rel(g, f, pairing)
        if (p * q) % 2:
            right = right.scale(rat(-1))
        assert left == right


def test_wedge_degree_overflow_is_zero(K):
    V = diag_space(ONE, ONE, ONE)
    pairing = PairingSpec.scalar_scalar(K)
    f = AltMap(V, K, 2, {(1, 2): [ONE]})
    g = AltMap(V, K, 2, {(2, 3): [ONE]})
    assert wedge_rel(f, g, pairing).is_zero()
    assert wedge_rel(f, g, pairing).degree == 4


def test_compose_matches_brute_force(K):
    rng = random.Random(19)
    V4 = diag_space(ONE, ONE, L1, ONE)
    f = random_map(V4, K, 2, rng)
    g = random_map(V4, V4, 2, rng)
    assert compose(f, g) == brute_compose(f, g)
    f1 = random_map(V4, K, 2, rng)
    g1 = random_map(V4, V4, 1, rng)
    assert compose(f1, g1) == brute_compose(f1, g1)


def test_compose_matches_brute_force_2_3(K):
    rng = random.Random(23)
    V6 = diag_space(*(ONE for _ in range(6)))
    f = random_map(V6, K, 2, rng, density=0.5)
    g = random_map(V6, V6, 3, rng, density=0.4)
    assert compose(f, g) == brute_compose(f, g)


def test_compose_shape_guard(K):
    V = diag_space(ONE, ONE)
    W = diag_space(ONE, ONE, ONE)
    f = AltMap(V, K, 1, {(1,): [ONE]})
    g = AltMap(W, W, 1, {(1,): W.basis_vector(0)})
    with pytest.raises(ShapeMismatch):
        compose(f, g)


def test_b_alt_scalar_and_weighted(K):
    V = diag_space(L1, L2, ONE)
    f = AltMap(V, K, 2, {(1, 2): [rat(2)], (1, 3): [ONE]})
    g = AltMap(V, K, 2, {(1, 2): [rat(3)], (2, 3): [ONE]})
    assert b_alt(f, g) == rat(6) / (L1 * L2)
    assert b_alt(f, f) == rat(4) / (L1 * L2) + ONE / L1


def test_b_alt_requires_diagonal_domain(K):
    gram = [[ZERO, ONE], [ONE, ZERO]]
    H = QuadraticSpace(("u", "v"), gram, name="H")
    f = AltMap(H, K, 1, {(1,): [ONE]})
    with pytest.raises(ShapeMismatch):
        b_alt(f, f)


def test_hodge_dual_classical_three_space(K):
    V = diag_space(ONE, ONE, ONE)
    volume = AltMap(V, K, 3, {(1, 2, 3): [ONE]})
    f = AltMap(V, K, 1, {(1,): [ONE]})
    star = hodge_dual(f, volume, K)
    assert star.coeffs == {(2, 3): [ONE]}
    g = AltMap(V, K, 1, {(2,): [ONE]})
    assert hodge_dual(g, volume, K).coeffs == {(1, 3): [rat(-1)]}


def test_hodge_dual_weighted_metric(K):
    V = diag_space(L1, L2, ONE)
    vol = L1 * L2
    volume = AltMap(V, K, 3, {(1, 2, 3): [vol]})
    f = AltMap(V, K, 1, {(1,): [ONE]})
    star = hodge_dual(f, volume, K)
    # alpha = e1 gives: star(2,3) = vol / q1
    assert star.coeffs == {(2, 3): [L2]}


def test_hodge_dual_vector_valued_self_consistent(K):
    V = diag_space(ONE, L1, L2, ONE)
    volume = AltMap(V, K, 4, {(1, 2, 3, 4): [L1 * L2]})
    rng = random.Random(29)
    f = random_map(V, V, 2, rng)
    # hodge_dual re-verifies the defining identity internally
    star = hodge_dual(f, volume, K)
    assert star.degree == 2
    # double dual must reproduce f up to the known sign/volume factor: check
    # by re-solving the identity the other way around on a sample alpha
    pairing = PairingSpec.form(V, K)
    alpha = AltMap(V, V, 2, {(1, 3): V.basis_vector(1)})
    lhs = wedge_rel(alpha, star, pairing).coeffs.get((1, 2, 3, 4), [ZERO])[0]
    assert lhs == b_alt(alpha, f) * L1 * L2


def test_volume_constant_guard(K):
    V = diag_space(ONE, ONE)
    volume = AltMap(V, K, 2, {(1, 2): [rat(5)]})
    assert volume_constant(volume) == rat(5)
    with pytest.raises(ShapeMismatch):
        volume_constant(AltMap(V, K, 1, {(1,): [ONE]}))


def test_dual_element_roundtrip(K):
    V = diag_space(ONE, L1, L2)
    f = AltMap(V, K, 2, {(1, 2): [rat(2)], (2, 3): [L1]})
    x = as_dual_element(f)
    assert x.dual and x.get((1, 2)) == rat(2)
    assert from_dual_element(x, K) == f


def test_identity_altmap(K):
    V = diag_space(ONE, ONE)
    ident = AltMap.identity(V)
    assert ident.value((1,)) == [ONE, ZERO]
    assert ident.value((2,)) == [ZERO, ONE]
