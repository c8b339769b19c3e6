"""Clifford algebra of the imaginary octonions and its spin representation.

The quadratic form is the negative of the octonion norm restricted to the
imaginaries, so each generator squares to -q(e_i) and distinct generators
anticommute.  Monomials are stored as 7-bit masks (bit i-1 for generator i);
folding a generator into a mask costs one popcount-style sign.  The spin
action sends a monomial to the composition of left multiplications on the
full octonions, an 8x8 matrix.

quantize identifies the exterior algebra of the imaginary space with the
Clifford algebra as filtered vector spaces by sending an increasing wedge
monomial to the ordered product of its generators.
"""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from . import linalg
from .errors import DegreeMismatch, NotImaginary, ShapeMismatch, WrongDimension
from .exterior import ExteriorElement
from .octonions import Octonion, OctonionAlgebra
from .scalars import Frac, ONE, ZERO

Vector = list[Frac]
Matrix = list[list[Frac]]

PAIR_MASKS: tuple[int, ...] = tuple(
    (1 << (i - 1)) | (1 << (j - 1)) for i, j in combinations(range(1, 8), 2)
)


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(7) if mask >> i & 1)


class CliffordElement:
    """Element stored as mask -> coefficient over the monomial basis."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: "CliffordAlgebra", coeffs: Optional[dict] = None):
        self.algebra = algebra
        self.coeffs: dict[int, Frac] = {}
        if coeffs:
            for mask, c in coeffs.items():
                if c.num:
                    self.coeffs[mask] = c

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            s = out.get(mask, ZERO) + c
            if s.num:
                out[mask] = s
            else:
                out.pop(mask, None)
        return CliffordElement(self.algebra, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            s = out.get(mask, ZERO) - c
            if s.num:
                out[mask] = s
            else:
                out.pop(mask, None)
        return CliffordElement(self.algebra, out)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.algebra, {m: -c for m, c in self.coeffs.items()})

    def scale(self, c: Frac) -> "CliffordElement":
        if c.is_zero():
            return CliffordElement(self.algebra)
        return CliffordElement(
            self.algebra, {m: c * v for m, v in self.coeffs.items()}
        )

    def __mul__(self, other: "CliffordElement") -> "CliffordElement":
        return self.algebra.multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def degrees(self) -> set[int]:
        return {bin(m).count("1") for m in self.coeffs}

    def parity_parts(self) -> tuple["CliffordElement", "CliffordElement"]:
        even, odd = {}, {}
        for mask, c in self.coeffs.items():
            (odd if bin(mask).count("1") & 1 else even)[mask] = c
        return (
            CliffordElement(self.algebra, even),
            CliffordElement(self.algebra, odd),
        )

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for mask in sorted(self.coeffs, key=lambda m: (bin(m).count("1"), m)):
            idx = _mask_to_tuple(mask)
            name = "1" if not idx else "e" + "".join(str(i) for i in idx)
            parts.append(f"({self.coeffs[mask].render()})*{name}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return self.render()


class CliffordAlgebra:
    """Clifford algebra C(ImO, -q) with memoized monomial products."""

    def __init__(self, octonions: OctonionAlgebra):
        self.octonions = octonions
        self.qs: Vector = list(octonions.space_im.diag)
        self._mono_cache: dict[tuple[int, int], tuple[int, Frac]] = {}
        self._matrix_cache: dict[int, Matrix] = {}
        self._omega: Optional[CliffordElement] = None

    # -- construction ---------------------------------------------------------

    def element(self, coeffs: dict) -> CliffordElement:
        return CliffordElement(self, coeffs)

    def scalar(self, c: Frac) -> CliffordElement:
        return CliffordElement(self, {0: c})

    def generator(self, i: int) -> CliffordElement:
        assert 1 <= i <= 7
        return CliffordElement(self, {1 << (i - 1): ONE})

    def monomial(self, indices: Sequence[int]) -> CliffordElement:
        mask = 0
        for i in indices:
            mask |= 1 << (i - 1)
        return CliffordElement(self, {mask: ONE})

    def pair_basis(self) -> list[CliffordElement]:
        """The 21 degree-2 monomials e_i e_j (i < j) in a fixed order."""
        return [CliffordElement(self, {m: ONE}) for m in PAIR_MASKS]

    # -- products ---------------------------------------------------------------

    def mono_mul(self, left: int, right: int) -> tuple[int, Frac]:
        """Product of two monomial masks: resulting mask and coefficient."""
        cached = self._mono_cache.get((left, right))
        if cached is not None:
            return cached
        mask = left
        coeff = ONE
        rem = right
        while rem:
            bit = rem & -rem
            rem ^= bit
            t = bit.bit_length() - 1
            above = mask >> (t + 1)
            swaps = bin(above).count("1")
            if swaps & 1:
                coeff = -coeff
            if mask & bit:
                # generator squares to -q_t
                coeff = coeff * (-self.qs[t])
                mask ^= bit
            else:
                mask |= bit
        out = (mask, coeff)
        self._mono_cache[(left, right)] = out
        return out

    def multiply(self, a: CliffordElement, b: CliffordElement) -> CliffordElement:
        out: dict[int, Frac] = {}
        for ma, ca in a.coeffs.items():
            for mb, cb in b.coeffs.items():
                mask, coeff = self.mono_mul(ma, mb)
                term = ca * cb * coeff
                s = out.get(mask, ZERO) + term
                if s.num:
                    out[mask] = s
                else:
                    out.pop(mask, None)
        return CliffordElement(self, out)

    def super_bracket(self, a: CliffordElement, b: CliffordElement) -> CliffordElement:
        """{a, b} = ab - (-1)^{|a||b|} ba, extended over parity components."""
        a_even, a_odd = a.parity_parts()
        b_even, b_odd = b.parity_parts()
        result = CliffordElement(self)
        for x, px in ((a_even, 0), (a_odd, 1)):
            if x.is_zero():
                continue
            for y, py in ((b_even, 0), (b_odd, 1)):
                if y.is_zero():
                    continue
                xy = self.multiply(x, y)
                yx = self.multiply(y, x)
                result = result + (xy + yx if px & py else xy - yx)
        return result

    # -- exterior identification ---------------------------------------------

    def quantize(self, x: ExteriorElement) -> CliffordElement:
        """Ordered product of generators on each increasing wedge monomial."""
        if x.space is not self.octonions.space_im or x.dual:
            raise ShapeMismatch("quantize expects a primal element of ImO")
        out = {}
        for index, c in x.coeffs.items():
            mask = 0
            for i in index:
                mask |= 1 << (i - 1)
            out[mask] = c
        return CliffordElement(self, out)

    def dequantize(self, c: CliffordElement) -> ExteriorElement:
        """Inverse of quantize on elements of a single degree."""
        degs = c.degrees()
        if len(degs) > 1:
            raise DegreeMismatch("dequantize needs a homogeneous-degree element")
        degree = degs.pop() if degs else 0
        coeffs = {_mask_to_tuple(m): v for m, v in c.coeffs.items()}
        return ExteriorElement(self.octonions.space_im, degree, coeffs)

    # -- spin representation ----------------------------------------------------

    def _generator_matrix(self, t: int) -> Matrix:
        # left multiplication by e_{t+1} on the octonions, in coordinates
        table = self.octonions.table
        i = t + 1
        return [[table[i][j][r] for j in range(8)] for r in range(8)]

    def _mono_matrix(self, mask: int) -> Matrix:
        got = self._matrix_cache.get(mask)
        if got is not None:
            return got
        if mask == 0:
            out = linalg.identity(8)
        else:
            bit = mask & -mask
            rest = mask ^ bit
            # the lowest generator is leftmost in the ordered product, so it
            # multiplies the remaining matrix product from the left
            out = linalg.mat_mul(
                self._generator_matrix(bit.bit_length() - 1), self._mono_matrix(rest)
            )
        self._matrix_cache[mask] = out
        return out

    def spinor_action(self, c: CliffordElement) -> Matrix:
        """8x8 matrix of c acting on the octonions by iterated left products."""
        out = linalg.zeros(8, 8)
        for mask, coeff in c.coeffs.items():
            mono = self._mono_matrix(mask)
            for r in range(8):
                row_o = out[r]
                row_m = mono[r]
                for s in range(8):
                    if row_m[s].num:
                        row_o[s] = row_o[s] + coeff * row_m[s]
        return out

    def apply_to_octonion(self, c: CliffordElement, x: Octonion) -> Octonion:
        mat = self.spinor_action(c)
        return self.octonions.from_coeffs(linalg.mat_vec(mat, x.coeffs))

    def trace_product(self, a: CliffordElement, b: CliffordElement) -> Frac:
        """Tr(rho(a) rho(b)) over the 8-dimensional spin representation."""
        ma = self.spinor_action(a)
        mb = self.spinor_action(b)
        s = ZERO
        for r in range(8):
            for t in range(8):
                if ma[r][t].num and mb[t][r].num:
                    s = s + ma[r][t] * mb[t][r]
        return s

    # -- distinguished elements -------------------------------------------------

    def omega(self) -> CliffordElement:
        """Quantization of the index-raised associative form."""
        if self._omega is None:
            from .altmap import as_dual_element
            from .exterior import eta_inv, scalar_codomain
            from .octonions import phi_as_altmap

            scalar = scalar_codomain()
            phi = phi_as_altmap(self.octonions, scalar)
            raised = eta_inv(as_dual_element(phi))
            self._omega = self.quantize(raised)
        return self._omega

    def c_of(self, u: Octonion) -> CliffordElement:
        """The degree-2 element {u, Omega} attached to an imaginary octonion."""
        if not u.is_imaginary():
            raise NotImaginary("c_of expects an imaginary octonion")
        cu = CliffordElement(
            self,
            {1 << t: c for t, c in enumerate(u.imaginary_coeffs()) if c.num},
        )
        return self.super_bracket(cu, self.omega())

    def w_basis(self) -> list[CliffordElement]:
        return [self.c_of(self.octonions.imaginary_unit(i)) for i in range(1, 8)]

    def g2_kernel(self) -> list[CliffordElement]:
        """Basis of the annihilator of 1 inside the degree-2 component.

        The matrix sends a pair monomial to its spin action on the octonion
        unit; the kernel must come out 14-dimensional or WrongDimension is
        raised.
        """
        rows = []
        for r in range(8):
            row = []
            for mask in PAIR_MASKS:
                mono = self._mono_matrix(mask)
                row.append(mono[r][0])
            rows.append(row)
        kernel = linalg.nullspace(rows)
        if len(kernel) != 14:
            raise WrongDimension(
                f"annihilator of the unit has dimension {len(kernel)}, expected 14"
            )
        out = []
        for vec in kernel:
            coeffs = {m: c for m, c in zip(PAIR_MASKS, vec) if c.num}
            out.append(CliffordElement(self, coeffs))
        return out


def clifford_multiply(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a.algebra.multiply(a, b)


def super_bracket(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a.algebra.super_bracket(a, b)


def quantize(algebra: CliffordAlgebra, x: ExteriorElement) -> CliffordElement:
    return algebra.quantize(x)


def dequantize(algebra: CliffordAlgebra, c: CliffordElement) -> ExteriorElement:
    return algebra.dequantize(c)


def spinor_action(algebra: CliffordAlgebra, c: CliffordElement) -> Matrix:
    return algebra.spinor_action(c)
