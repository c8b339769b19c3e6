"""Clifford monomial calculus, quantization, spin action, distinguished
degree-2 elements, and the 14-dimensional annihilator of the unit."""

from __future__ import annotations

import random

import pytest

from specialortho import linalg
from specialortho.clifford import (
    CliffordAlgebra,
    PAIR_MASKS,
    clifford_multiply,
    dequantize,
    quantize,
    spinor_action,
    super_bracket,
)
from specialortho.errors import DegreeMismatch, NotImaginary, ShapeMismatch
from specialortho.exterior import ExteriorElement, wedge
from specialortho.octonions import bilinear_B, build_algebra, cross_product
from specialortho.scalars import L1, L2, L3, ONE, ZERO, rat


@pytest.fixture(scope="module")
def A():
    return build_algebra(L1, L2, L3)


@pytest.fixture(scope="module")
def C(A):
    return CliffordAlgebra(A)


def random_element(C, rng, masks=None):
    masks = masks if masks is not None else range(128)
    coeffs = {}
    for m in masks:
        if rng.random() < 0.3:
            coeffs[m] = rat(rng.randint(-2, 2))
    return C.element(coeffs)


def test_generator_relations(C):
    for i in range(1, 8):
        ei = C.generator(i)
        sq = ei * ei
        assert sq == C.scalar(-C.qs[i - 1])
        for j in range(i + 1, 8):
            ej = C.generator(j)
            anti = ei * ej + ej * ei
            assert anti.is_zero()


def test_monomial_product_associative(C):
    rng = random.Random(3)
    for _ in range(30):
        a, b, c = (rng.randrange(128) for _ in range(3))
        m1, c1 = C.mono_mul(a, b)
        m2, c2 = C.mono_mul(m1, c)
        m3, c3 = C.mono_mul(b, c)
        m4, c4 = C.mono_mul(a, m3)
        assert m2 == m4 and c1 * c2 == c3 * c4


def test_quantize_dequantize_roundtrip(C, A):
    x = ExteriorElement(
        A.space_im, 2, {(1, 2): rat(3), (4, 7): ONE / L1}
    )
    q = C.quantize(x)
    assert set(q.coeffs) == {0b11, 0b1001000}
    assert dequantize(C, q) == x
    with pytest.raises(DegreeMismatch):
        C.dequantize(C.element({0b1: ONE, 0b11: ONE}))
    with pytest.raises(ShapeMismatch):
        C.quantize(ExteriorElement(A.space_oct, 1, {(1,): ONE}))


def test_quantize_antisymmetrization(C, A):
    # quantize(x ^ y) = (Q(x) Q(y) - Q(y) Q(x)) / 2 for degree-1 x, y
    rng = random.Random(5)
    for _ in range(5):
        x = ExteriorElement(
            A.space_im, 1, {(i,): rat(rng.randint(-2, 2)) for i in range(1, 8)}
        )
        y = ExteriorElement(
            A.space_im, 1, {(i,): rat(rng.randint(-2, 2)) for i in range(1, 8)}
        )
        qx, qy = C.quantize(x), C.quantize(y)
        lhs = C.quantize(wedge(x, y))
        rhs = (qx * qy - qy * qx).scale(rat(1, 2))
        assert lhs == rhs


def test_spin_action_is_representation(C):
    rng = random.Random(7)
    for _ in range(4):
        a = random_element(C, rng, masks=range(32))
        b = random_element(C, rng, masks=range(32))
        left = spinor_action(C, clifford_multiply(a, b))
        right = linalg.mat_mul(C.spinor_action(a), C.spinor_action(b))
        assert linalg.mat_eq(left, right)


def test_spin_action_generator_squares(C):
    for i in range(1, 8):
        m = C.spinor_action(C.generator(i))
        sq = linalg.mat_mul(m, m)
        expect = linalg.mat_scale(linalg.identity(8), -C.qs[i - 1])
        assert linalg.mat_eq(sq, expect)


def test_super_bracket_parity_rules(C):
    rng = random.Random(11)
    even_masks = [m for m in range(128) if bin(m).count("1") % 2 == 0]
    odd_masks = [m for m in range(128) if bin(m).count("1") % 2 == 1]
    a = random_element(C, rng, masks=odd_masks)
    b = random_element(C, rng, masks=odd_masks)
    assert super_bracket(a, b) == a * b + b * a
    c = random_element(C, rng, masks=even_masks)
    assert super_bracket(c, a) == c * a - a * c
    assert super_bracket(c, c) == c * c - c * c


def test_omega_structure(C, A):
    omega = C.omega()
    assert omega.degrees() == {3}
    assert len(omega.coeffs) == 7
    # coefficient on e1 e2 e3 is phi(e1,e2,e3) / (q1 q2 q3) = 1 / q3
    assert omega.coeffs[0b111] == ONE / (L1 * L2)


def test_omega_spin_eigenvalues(C, A):
    # rho(Omega) fixes every imaginary unit and scales the unit by -7
    mat = C.spinor_action(C.omega())
    one = A.one()
    out = C.apply_to_octonion(C.omega(), one)
    assert out == one.scale(rat(-7))
    for i in range(1, 8):
        u = A.unit(i)
        assert C.apply_to_octonion(C.omega(), u) == u


def test_c_of_structure_and_action(C, A):
    for i in range(1, 8):
        u = A.imaginary_unit(i)
        cu = C.c_of(u)
        assert cu.degrees() <= {2}
        # rho(c_u) sends 1 to -6u and v to 2 u x v + 6 B(u, v)
        assert C.apply_to_octonion(cu, A.one()) == u.scale(rat(-6))
        for j in range(1, 8):
            v = A.imaginary_unit(j)
            expect = cross_product(u, v).scale(rat(2)) + A.one().scale(
                rat(6) * bilinear_B(u, v)
            )
            assert C.apply_to_octonion(cu, v) == expect
    with pytest.raises(NotImaginary):
        C.c_of(A.one())


def test_trace_form_on_w(C, A):
    # Tr(rho(c_u) rho(c_v)) = -96 B(u, v)
    for i in (1, 2, 5):
        for j in (1, 3, 7):
            u, v = A.imaginary_unit(i), A.imaginary_unit(j)
            got = C.trace_product(C.c_of(u), C.c_of(v))
            assert got == rat(-96) * bilinear_B(u, v)


def test_g2_kernel_dimension_and_annihilation(C, A):
    kernel = C.g2_kernel()
    assert len(kernel) == 14
    for x in kernel:
        assert set(x.coeffs) <= set(PAIR_MASKS)
        assert C.apply_to_octonion(x, A.one()).is_zero()


def test_g2_kernel_orthogonal_to_w_under_trace(C):
    kernel = C.g2_kernel()
    w = C.w_basis()
    for x in kernel[:3]:
        for c in w[:3]:
            assert C.trace_product(x, c) == ZERO


def test_kernel_plus_w_spans_degree_two(C):
    kernel = C.g2_kernel()
    w = C.w_basis()
    mask_pos = {m: t for t, m in enumerate(PAIR_MASKS)}
    rows = []
    for x in kernel + w:
        row = [ZERO] * 21
        for m, c in x.coeffs.items():
            row[mask_pos[m]] = c
        rows.append(row)
    assert linalg.rank(rows) == 21
