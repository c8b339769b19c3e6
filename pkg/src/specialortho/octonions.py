"""Octonion algebras with symbolic structure constants.

Triple Cayley-Dickson doubling over the field Q(l1, l2, l3, a): the doubling
scalars are -l1, -l2, -l3, so the basis unit at position k (binary digits
selecting the three doubling levels) squares to minus a product of the
parameters.  The norm is q(x) = x conj(x); its polarization B makes the basis
orthogonal with B(e_k, e_k) the matching parameter product.  Index arithmetic
on the seven imaginary units follows xor: e_i e_j = (sign) (monomial) e_{i xor j}.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .altmap import AltMap
from .errors import BadGenerators, DegenerateParameter, NotImaginary, ShapeMismatch
from .exterior import QuadraticSpace, all_multi_indices
from .scalars import Frac, ONE, ZERO, rat

Vector = list[Frac]


def _cd_conj(a: list) -> list:
    if len(a) == 1:
        return [a[0]]
    half = len(a) // 2
    left = _cd_conj(a[:half])
    return left + [-x for x in a[half:]]


def _cd_mul(a: list, b: list, gammas: Sequence[Frac]) -> list:
    if len(a) == 1:
        return [a[0] * b[0]]
    half = len(a) // 2
    gamma = gammas[half.bit_length() - 1]
    a1, a2 = a[:half], a[half:]
    b1, b2 = b[:half], b[half:]
    # (a1, a2)(b1, b2) = (a1 b1 + gamma conj(b2) a2, b2 a1 + a2 conj(b1))
    first = [
        x + gamma * y
        for x, y in zip(_cd_mul(a1, b1, gammas), _cd_mul(_cd_conj(b2), a2, gammas))
    ]
    second = [
        x + y for x, y in zip(_cd_mul(b2, a1, gammas), _cd_mul(a2, _cd_conj(b1), gammas))
    ]
    return first + second


class OctonionAlgebra:
    """Structure constants, Gram data, and the two ambient quadratic spaces."""

    def __init__(self, l1: Frac, l2: Frac, l3: Frac):
        for value in (l1, l2, l3):
            if value.is_zero():
                raise DegenerateParameter("doubling parameters must be nonzero")
        self.params = (l1, l2, l3)
        gammas = (-l1, -l2, -l3)
        units = []
        for k in range(8):
            coeffs = [ONE if i == k else ZERO for i in range(8)]
            units.append(coeffs)
        self.table: list[list[Vector]] = [
            [_cd_mul(units[i], units[j], gammas) for j in range(8)] for i in range(8)
        ]
        # polarized norm: B(x, y) = (x conj(y) + y conj(x)) / 2, real component
        gram = []
        for i in range(8):
            row = []
            ci = _cd_conj(units[i])
            for j in range(8):
                cj = _cd_conj(units[j])
                val = (
                    _cd_mul(units[i], cj, gammas)[0]
                    + _cd_mul(units[j], ci, gammas)[0]
                ) / 2
                row.append(val)
            gram.append(row)
        self.gram = gram
        self.space_oct = QuadraticSpace(
            tuple(f"e{k+1}" for k in range(8)), gram, name="O"
        )
        self.space_im = QuadraticSpace(
            tuple(f"e{k}" for k in range(1, 8)),
            [[gram[i][j] for j in range(1, 8)] for i in range(1, 8)],
            name="ImO",
        )

    def unit(self, k: int) -> "Octonion":
        """Basis octonion at position k (0 is the real unit)."""
        coeffs = [ONE if i == k else ZERO for i in range(8)]
        return Octonion(self, coeffs)

    def one(self) -> "Octonion":
        return self.unit(0)

    def imaginary_unit(self, k: int) -> "Octonion":
        """The imaginary basis unit e_k for k in 1..7."""
        assert 1 <= k <= 7
        return self.unit(k)

    def from_coeffs(self, coeffs: Sequence[Frac]) -> "Octonion":
        return Octonion(self, list(coeffs))

    def from_imaginary(self, coeffs: Sequence[Frac]) -> "Octonion":
        """Build an octonion from a 7-vector of imaginary coordinates."""
        if len(coeffs) != 7:
            raise ShapeMismatch("expected 7 imaginary coordinates")
        return Octonion(self, [ZERO] + list(coeffs))

    def __repr__(self) -> str:
        rendered = ", ".join(p.render() for p in self.params)
        return f"OctonionAlgebra({rendered})"


class Octonion:
    """Element of an OctonionAlgebra in basis coordinates."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: OctonionAlgebra, coeffs: Sequence[Frac]):
        assert len(coeffs) == 8
        self.algebra = algebra
        self.coeffs = list(coeffs)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.algebra, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(self.algebra, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Octonion":
        return Octonion(self.algebra, [-a for a in self.coeffs])

    def scale(self, c: Frac) -> "Octonion":
        return Octonion(self.algebra, [c * a for a in self.coeffs])

    def __mul__(self, other: "Octonion") -> "Octonion":
        table = self.algebra.table
        out = [ZERO] * 8
        for i, a in enumerate(self.coeffs):
            if not a.num:
                continue
            for j, b in enumerate(other.coeffs):
                if not b.num:
                    continue
                c = a * b
                for k, t in enumerate(table[i][j]):
                    if t.num:
                        out[k] = out[k] + c * t
        return Octonion(self.algebra, out)

    def conjugate(self) -> "Octonion":
        return Octonion(self.algebra, [self.coeffs[0]] + [-a for a in self.coeffs[1:]])

    def real_part(self) -> Frac:
        return self.coeffs[0]

    def imaginary_coeffs(self) -> Vector:
        return list(self.coeffs[1:])

    def is_imaginary(self) -> bool:
        return self.coeffs[0].is_zero()

    def is_zero(self) -> bool:
        return all(not a.num for a in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def render(self) -> str:
        parts = []
        for k, a in enumerate(self.coeffs):
            if not a.num:
                continue
            name = "1" if k == 0 else f"e{k}"
            parts.append(f"({a.render()})*{name}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return self.render()


def build_algebra(l1: Frac, l2: Frac, l3: Frac) -> OctonionAlgebra:
    """Construct the algebra; raises DegenerateParameter on a zero parameter."""
    return OctonionAlgebra(l1, l2, l3)


def multiply(x: Octonion, y: Octonion) -> Octonion:
    return x * y


def conjugate(x: Octonion) -> Octonion:
    return x.conjugate()


def norm_q(x: Octonion) -> Frac:
    """The multiplicative norm q(x) = x conj(x)."""
    return (x * x.conjugate()).real_part()


def bilinear_B(x: Octonion, y: Octonion) -> Frac:
    """Polarization of the norm: B(x, y) = (q(x+y) - q(x) - q(y)) / 2."""
    gram = x.algebra.gram
    s = ZERO
    for i, a in enumerate(x.coeffs):
        if not a.num:
            continue
        row = gram[i]
        for j, b in enumerate(y.coeffs):
            if b.num and row[j].num:
                s = s + a * b * row[j]
    return s


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return x * y - y * x


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def jacobi_tensor(u: Octonion, v: Octonion, w: Octonion) -> Octonion:
    """J(u, v, w) = [u,[v,w]] + [v,[w,u]] + [w,[u,v]]."""
    return (
        commutator(u, commutator(v, w))
        + commutator(v, commutator(w, u))
        + commutator(w, commutator(u, v))
    )


def cross_product(u: Octonion, v: Octonion) -> Octonion:
    """u x v = (conj(v) u - conj(u) v) / 2; imaginary-valued on imaginaries."""
    return (v.conjugate() * u - u.conjugate() * v).scale(rat(1, 2))


def associative_form(u: Octonion, v: Octonion, w: Octonion) -> Frac:
    """The alternating trilinear form B(u x v, w) on imaginary octonions."""
    for x in (u, v, w):
        if not x.is_imaginary():
            raise NotImaginary("the associative form is defined on imaginaries")
    return bilinear_B(cross_product(u, v), w)


def phi_as_altmap(algebra: OctonionAlgebra, scalar: QuadraticSpace) -> AltMap:
    """The associative form as a degree-3 scalar map on the imaginary space."""
    coeffs = {}
    for index in all_multi_indices(7, 3):
        i, j, k = index
        value = associative_form(
            algebra.imaginary_unit(i),
            algebra.imaginary_unit(j),
            algebra.imaginary_unit(k),
        )
        coeffs[index] = [value]
    return AltMap(algebra.space_im, scalar, 3, coeffs, name="phi")


def cross_as_altmap(algebra: OctonionAlgebra) -> AltMap:
    """The cross product as a degree-2 map ImO^2 -> ImO."""
    coeffs = {}
    for index in all_multi_indices(7, 2):
        i, j = index
        prod = cross_product(algebra.imaginary_unit(i), algebra.imaginary_unit(j))
        coeffs[index] = prod.imaginary_coeffs()
    return AltMap(algebra.space_im, algebra.space_im, 2, coeffs, name="cross")


def malcev_check(u: Octonion, v: Octonion, w: Octonion) -> bool:
    """u x (v x w) + v x (u x w) = B(v,w) u + B(u,w) v - 2 B(u,v) w."""
    for x in (u, v, w):
        if not x.is_imaginary():
            raise NotImaginary("the cross-product identity lives on imaginaries")
    lhs = cross_product(u, cross_product(v, w)) + cross_product(v, cross_product(u, w))
    rhs = (
        u.scale(bilinear_B(v, w))
        + v.scale(bilinear_B(u, w))
        - w.scale(bilinear_B(u, v) * Frac.from_int(2))
    )
    return (lhs - rhs).is_zero()


def generate_labeled_basis(
    algebra: OctonionAlgebra,
    generators: Sequence[Octonion],
    include_unit: bool = False,
) -> list[Octonion]:
    """Basis from three admissible anticommuting generators (g1, g2, g3):

    returns [g1, g2, g1 g2, g3, g1 g3, g2 g3, (g1 g2) g3], optionally with the
    unit in front.  Raises BadGenerators when a generator is not imaginary or
    anisotropic, two generators fail to be orthogonal, or the third lies in
    the subalgebra generated by the first two (detected by B(g3, g1 g2) = 0
    failing).
    """
    if len(generators) != 3:
        raise BadGenerators("exactly three generators are required")
    g1, g2, g3 = generators
    for g in generators:
        if not g.is_imaginary():
            raise BadGenerators("generators must be imaginary")
        if norm_q(g).is_zero():
            raise BadGenerators("generators must be anisotropic")
    for a, b in ((g1, g2), (g1, g3), (g2, g3)):
        if not bilinear_B(a, b).is_zero():
            raise BadGenerators("generators must be pairwise orthogonal")
    g12 = g1 * g2
    if not bilinear_B(g3, g12).is_zero():
        raise BadGenerators("third generator lies in the quaternion subalgebra")
    basis = [g1, g2, g12, g3, g1 * g3, g2 * g3, g12 * g3]
    if include_unit:
        return [algebra.one()] + basis
    return basis


def fano_lines(algebra: OctonionAlgebra) -> list[tuple[int, int, int]]:
    """The seven oriented index triples (i, j, i xor j) with e_i e_j a
    positive multiple of e_{i xor j}."""
    lines = []
    seen = set()
    for i in range(1, 8):
        for j in range(1, 8):
            if i == j:
                continue
            k = i ^ j
            key = frozenset((i, j, k))
            if key in seen:
                continue
            prod = algebra.table[i][j]
            coeff = prod[k]
            assert coeff.num, "product must land on the xor index"
            if coeff.lead_sign() > 0:
                seen.add(key)
                lines.append((i, j, k))
    return sorted(lines)


def imaginary_product_monomial(algebra: OctonionAlgebra, i: int, j: int) -> Optional[Frac]:
    """Coefficient c with e_i e_j = c e_{i xor j} for distinct i, j in 1..7."""
    prod = algebra.table[i][j]
    k = i ^ j
    for t, c in enumerate(prod):
        if t != k and c.num:
            return None
    return prod[k]
