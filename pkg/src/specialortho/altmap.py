"""Alternating multilinear maps and the operations that combine them.

An AltMap of degree p on a quadratic space V with values in a codomain U is
stored by its values on strictly increasing basis multi-indices.  The three
structural operations follow the shuffle conventions without factorial
normalization:

  wedge_rel(f, g, pairing): (p, q)-shuffle sum of pairing(f(...), g(...)),
  compose(f, g): (q, ..., q)-shuffle sum of f(g(...), ..., g(...)),
  b_alt(f, g): sum over multi-indices I of <f(e_I), g(e_I)> / q(e_I),

and hodge_dual inverts alpha ^_B (star f) = b_alt(alpha, f) * volume.  The
brute-force reference implementations (full symmetric-group sums divided by
the stabilizer order) are exported for oracle testing.

Spaces are compared by identity: two maps combine only when they were built
on the same QuadraticSpace object.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, Optional, Sequence

from . import linalg
from .errors import ArityMismatch, ShapeMismatch, SingularPairing
from .exterior import (
    ExteriorElement,
    MultiIndex,
    QuadraticSpace,
    all_multi_indices,
    complement_index,
    render_multi_index,
)
from .scalars import Frac, ONE, ZERO, solve_linear

Vector = list[Frac]


class PairingSpec:
    """A bilinear pairing U1 x U2 -> U3 given by its table on basis pairs."""

    def __init__(
        self,
        left: QuadraticSpace,
        right: QuadraticSpace,
        result: QuadraticSpace,
        table: Sequence[Sequence[Sequence[Frac]]],
        name: str = "",
    ):
        self.left = left
        self.right = right
        self.result = result
        self.name = name or "pairing"
        if len(table) != left.dim or any(len(row) != right.dim for row in table):
            raise ShapeMismatch(f"{self.name}: table shape mismatch")
        self.table = [[list(v) for v in row] for row in table]

    def apply(self, x: Sequence[Frac], y: Sequence[Frac]) -> Vector:
        out = [ZERO] * self.result.dim
        for i, xi in enumerate(x):
            if not xi.num:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj.num:
                    continue
                c = xi * yj
                for k, t in enumerate(row[j]):
                    if t.num:
                        out[k] = out[k] + c * t
        return out

    @classmethod
    def scalar_multiply(cls, scalar: QuadraticSpace, space: QuadraticSpace) -> "PairingSpec":
        """k x V -> V, scalar multiplication."""
        table = [[space.basis_vector(j) for j in range(space.dim)]]
        return cls(scalar, space, space, table, name="scalar action")

    @classmethod
    def multiply_scalar(cls, space: QuadraticSpace, scalar: QuadraticSpace) -> "PairingSpec":
        """V x k -> V, scalar multiplication on the right."""
        table = [[space.basis_vector(i)] for i in range(space.dim)]
        return cls(space, scalar, space, table, name="scalar action")

    @classmethod
    def scalar_scalar(cls, scalar: QuadraticSpace) -> "PairingSpec":
        return cls(scalar, scalar, scalar, [[[ONE]]], name="field product")

    @classmethod
    def form(cls, space: QuadraticSpace, scalar: QuadraticSpace) -> "PairingSpec":
        """V x V -> k through the bilinear form of V."""
        table = [
            [[space.gram[i][j]] for j in range(space.dim)] for i in range(space.dim)
        ]
        return cls(space, space, scalar, table, name=f"form on {space.name}")

    @classmethod
    def action(
        cls,
        algebra: QuadraticSpace,
        module: QuadraticSpace,
        matrices: Sequence[Sequence[Sequence[Frac]]],
    ) -> "PairingSpec":
        """g x V -> V from the representing matrices of the algebra basis."""
        if len(matrices) != algebra.dim:
            raise ShapeMismatch("one matrix per algebra basis element required")
        # table[i][j] is the j-th column of matrices[i]
        table = [
            [[m[r][j] for r in range(module.dim)] for j in range(module.dim)]
            for m in matrices
        ]
        return cls(algebra, module, module, table, name=f"action on {module.name}")


def _as_basis_index(vec: Sequence[Frac]) -> Optional[int]:
    """0-based index when vec is exactly a basis vector, else None."""
    found = -1
    for i, c in enumerate(vec):
        if c.num:
            if found >= 0 or not c.is_one():
                return None
            found = i
    return found if found >= 0 else None


def _sort_with_sign(indices: Sequence[int]):
    """Sort 1-based indices; returns (sign, tuple) or (0, None) on repeats."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for i in range(1, len(idx)):
        if idx[i - 1] == idx[i]:
            return 0, None
    return sign, tuple(idx)


class AltMap:
    """Alternating p-linear map V^p -> U, stored on increasing multi-indices."""

    def __init__(
        self,
        domain: QuadraticSpace,
        codomain: QuadraticSpace,
        degree: int,
        coeffs: Optional[dict] = None,
        name: str = "",
    ):
        self.domain = domain
        self.codomain = codomain
        self.degree = degree
        self.name = name
        self.coeffs: dict[MultiIndex, Vector] = {}
        if coeffs:
            for index, vec in coeffs.items():
                if any(c.num for c in vec):
                    self.coeffs[tuple(index)] = list(vec)

    @classmethod
    def from_function(
        cls,
        domain: QuadraticSpace,
        codomain: QuadraticSpace,
        degree: int,
        fn: Callable[[MultiIndex], Sequence[Frac]],
        name: str = "",
    ) -> "AltMap":
        coeffs = {}
        for index in all_multi_indices(domain.dim, degree):
            coeffs[index] = list(fn(index))
        return cls(domain, codomain, degree, coeffs, name=name)

    @classmethod
    def identity(cls, space: QuadraticSpace, name: str = "Id") -> "AltMap":
        coeffs = {(i + 1,): space.basis_vector(i) for i in range(space.dim)}
        return cls(space, space, 1, coeffs, name=name)

    def value(self, index: MultiIndex) -> Vector:
        got = self.coeffs.get(tuple(index))
        return list(got) if got is not None else [ZERO] * self.codomain.dim

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check_same_shape(self, other: "AltMap") -> None:
        if (
            self.domain is not other.domain
            or self.codomain is not other.codomain
            or self.degree != other.degree
        ):
            raise ShapeMismatch(
                f"maps {self.name or '?'} and {other.name or '?'} have different shapes"
            )

    def __add__(self, other: "AltMap") -> "AltMap":
        self._check_same_shape(other)
        out = {k: list(v) for k, v in self.coeffs.items()}
        for k, v in other.coeffs.items():
            if k in out:
                out[k] = [a + b for a, b in zip(out[k], v)]
            else:
                out[k] = list(v)
        return AltMap(self.domain, self.codomain, self.degree, out)

    def __sub__(self, other: "AltMap") -> "AltMap":
        return self + other.scale(Frac.from_int(-1))

    def __neg__(self) -> "AltMap":
        return self.scale(Frac.from_int(-1))

    def scale(self, c: Frac) -> "AltMap":
        if c.is_zero():
            return AltMap(self.domain, self.codomain, self.degree, None, name=self.name)
        out = {k: [c * x for x in v] for k, v in self.coeffs.items()}
        return AltMap(self.domain, self.codomain, self.degree, out, name=self.name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AltMap):
            return NotImplemented
        return (
            self.domain is other.domain
            and self.codomain is other.codomain
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def substitute(self, bindings) -> "AltMap":
        out = {k: [x.substitute(bindings) for x in v] for k, v in self.coeffs.items()}
        return AltMap(self.domain, self.codomain, self.degree, out, name=self.name)

    def evaluate(self, args: Sequence[Sequence[Frac]]) -> Vector:
        """Value on arbitrary coordinate vectors (multilinear expansion)."""
        if len(args) != self.degree:
            raise ArityMismatch(
                f"degree-{self.degree} map evaluated on {len(args)} arguments"
            )
        basis_idx = [_as_basis_index(v) for v in args]
        if all(i is not None for i in basis_idx):
            sign, index = _sort_with_sign([i + 1 for i in basis_idx])
            if sign == 0:
                return [ZERO] * self.codomain.dim
            got = self.coeffs.get(index)
            if got is None:
                return [ZERO] * self.codomain.dim
            return list(got) if sign > 0 else [-x for x in got]
        out = [ZERO] * self.codomain.dim
        p = self.degree
        for index, vec in self.coeffs.items():
            minor = [[args[c][index[r] - 1] for c in range(p)] for r in range(p)]
            d = linalg.det(minor)
            if d.is_zero():
                continue
            for k, x in enumerate(vec):
                if x.num:
                    out[k] = out[k] + d * x
        return out

    def dump_lines(self) -> list[str]:
        lines = []
        labels = self.codomain.labels
        for index in sorted(self.coeffs):
            vec = self.coeffs[index]
            parts = [
                f"{c.render()}*{labels[k]}" for k, c in enumerate(vec) if c.num
            ]
            lines.append(f"{render_multi_index(index)} -> " + " + ".join(parts))
        return lines

    def __repr__(self) -> str:
        return (
            f"<AltMap {self.name or '?'}: degree {self.degree}, "
            f"{self.domain.name} -> {self.codomain.name}, "
            f"{len(self.coeffs)} nonzero values>"
        )


def identity_altmap(space: QuadraticSpace) -> AltMap:
    return AltMap.identity(space)


def _shuffle_sign(positions: Sequence[int], p: int) -> int:
    # parity of the (p, q)-shuffle selecting `positions` for the first block
    total = sum(positions) - (p * (p - 1)) // 2
    return -1 if total % 2 else 1


def wedge_rel(f: AltMap, g: AltMap, pairing: PairingSpec) -> AltMap:
    """Shuffle wedge of f and g relative to a bilinear pairing of codomains."""
    if f.domain is not g.domain:
        raise ShapeMismatch("wedge_rel needs a common domain")
    if pairing.left is not f.codomain or pairing.right is not g.codomain:
        raise ShapeMismatch("pairing does not match the codomains")
    p, q = f.degree, g.degree
    n = f.domain.dim
    result = AltMap(f.domain, pairing.result, p + q)
    if p + q > n or f.is_zero() or g.is_zero():
        return result
    positions = list(range(p + q))
    for T in all_multi_indices(n, p + q):
        acc = [ZERO] * pairing.result.dim
        touched = False
        for chosen in combinations(positions, p):
            I = tuple(T[r] for r in chosen)
            fI = f.coeffs.get(I)
            if fI is None:
                continue
            rest = tuple(T[r] for r in positions if r not in chosen)
            gJ = g.coeffs.get(rest)
            if gJ is None:
                continue
            val = pairing.apply(fI, gJ)
            sign = _shuffle_sign(chosen, p)
            touched = True
            if sign > 0:
                acc = [a + v for a, v in zip(acc, val)]
            else:
                acc = [a - v for a, v in zip(acc, val)]
        if touched and any(c.num for c in acc):
            result.coeffs[T] = acc
    return result


def _ordered_blocks(positions: tuple[int, ...], p: int, q: int):
    """All ways to split positions into p ordered increasing blocks of size q."""
    if p == 1:
        yield (positions,)
        return
    for first in combinations(positions, q):
        first_set = set(first)
        rest = tuple(x for x in positions if x not in first_set)
        for tail in _ordered_blocks(rest, p - 1, q):
            yield (first,) + tail


def _concat_parity(blocks: Sequence[Sequence[int]]) -> int:
    seq = [x for b in blocks for x in b]
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def compose(f: AltMap, g: AltMap) -> AltMap:
    """Shuffle composition: degree-p f applied to p copies of degree-q g."""
    if g.codomain is not f.domain:
        raise ShapeMismatch("compose needs codomain of g equal to domain of f")
    p, q = f.degree, g.degree
    n = g.domain.dim
    result = AltMap(g.domain, f.codomain, p * q)
    if p * q > n or f.is_zero() or g.is_zero():
        return result
    for T in all_multi_indices(n, p * q):
        acc = [ZERO] * f.codomain.dim
        touched = False
        for blocks in _ordered_blocks(T, p, q):
            gvals = []
            for block in blocks:
                got = g.coeffs.get(block)
                if got is None:
                    gvals = None
                    break
                gvals.append(got)
            if gvals is None:
                continue
            val = f.evaluate(gvals)
            if not any(c.num for c in val):
                continue
            sign = _concat_parity(blocks)
            touched = True
            if sign > 0:
                acc = [a + v for a, v in zip(acc, val)]
            else:
                acc = [a - v for a, v in zip(acc, val)]
        if touched and any(c.num for c in acc):
            result.coeffs[T] = acc
    return result


def b_alt(f: AltMap, g: AltMap) -> Frac:
    """Form on alternating maps: sum_I <f(e_I), g(e_I)> / q(e_I)."""
    if f.domain is not g.domain or f.degree != g.degree:
        raise ShapeMismatch("b_alt needs equal domains and degrees")
    if f.codomain is not g.codomain:
        raise ShapeMismatch("b_alt needs a common codomain")
    if not f.domain.is_diagonal:
        raise ShapeMismatch("b_alt requires a diagonal domain gram")
    total = ZERO
    small, large = (f, g) if len(f.coeffs) <= len(g.coeffs) else (g, f)
    for index, vec in small.coeffs.items():
        other = large.coeffs.get(index)
        if other is None:
            continue
        inner = f.codomain.pair(vec, other)
        if inner.num:
            total = total + inner / f.domain.q_product(index)
    return total


def volume_constant(volume: AltMap) -> Frac:
    """Coefficient of the full multi-index of a top-degree scalar form."""
    n = volume.domain.dim
    if volume.degree != n or volume.codomain.dim != 1:
        raise ShapeMismatch("volume must be a top-degree scalar form")
    full = tuple(range(1, n + 1))
    vec = volume.coeffs.get(full)
    if vec is None or vec[0].is_zero():
        raise SingularPairing("volume form vanishes at the top multi-index")
    return vec[0]


def hodge_dual(f: AltMap, volume: AltMap, scalar: QuadraticSpace) -> AltMap:
    """The unique g with alpha ^_B g = b_alt(alpha, f) * volume for all alpha.

    alpha runs over degree-p maps into the codomain of f, the wedge pairs
    codomain values through the codomain form, and volume is a fixed
    top-degree scalar covariant.  Solved one codomain coordinate at a time
    (the coefficient matrix is the same signed pairing matrix for each), then
    the codomain Gram matrix is inverted on each multi-index.  The defining
    identity is re-verified for every basis alpha before returning; failure
    raises SingularPairing.
    """
    space = f.domain
    if volume.domain is not space:
        raise ShapeMismatch("volume lives on a different space")
    if not space.is_diagonal:
        raise ShapeMismatch("hodge_dual requires a diagonal domain gram")
    n, p = space.dim, f.degree
    vol = volume_constant(volume)
    cod = f.codomain
    udim = cod.dim
    p_indices = all_multi_indices(n, p)
    c_indices = all_multi_indices(n, n - p)
    col_of = {J: t for t, J in enumerate(c_indices)}
    m = len(p_indices)
    # coefficient matrix: row I, column J = complement(I); entry = merge sign
    coeff = [[ZERO] * m for _ in range(m)]
    for r, I in enumerate(p_indices):
        J = complement_index(I, n)
        total = sum(I) - (p * (p + 1)) // 2
        coeff[r][col_of[J]] = Frac.from_int(-1 if total % 2 else 1)
    # right-hand sides: one column per codomain coordinate b, entries over I
    gram = cod.gram
    rhs_columns = []
    for b in range(udim):
        column = []
        for I in p_indices:
            fI = f.coeffs.get(I)
            if fI is None:
                column.append(ZERO)
                continue
            inner = ZERO
            row = gram[b]
            for k, x in enumerate(fI):
                if x.num and row[k].num:
                    inner = inner + row[k] * x
            column.append(inner * vol / space.q_product(I))
        rhs_columns.append(column)
    solved = solve_linear(coeff, rhs_columns)
    # solved[b][t] = <e_b, g(J_t)>; invert the codomain gram per multi-index
    lowered_columns = [[solved[b][t] for b in range(udim)] for t in range(len(c_indices))]
    if cod.dim == 1:
        raised = [[c / gram[0][0] for c in col] for col in lowered_columns]
    else:
        raised = solve_linear(gram, lowered_columns)
    star = AltMap(space, cod, n - p)
    for t, J in enumerate(c_indices):
        vec = raised[t]
        if any(c.num for c in vec):
            star.coeffs[J] = list(vec)
    _verify_hodge(f, star, volume, vol, scalar)
    return star


def _verify_hodge(
    f: AltMap, star: AltMap, volume: AltMap, vol: Frac, scalar: QuadraticSpace
) -> None:
    """Check alpha ^_B star = b_alt(alpha, f) * vol for every basis alpha."""
    space = f.domain
    n, p = space.dim, f.degree
    full = tuple(range(1, n + 1))
    pairing = PairingSpec.form(f.codomain, scalar)
    for I in all_multi_indices(n, p):
        for b in range(f.codomain.dim):
            alpha = AltMap(
                space, f.codomain, p, {I: f.codomain.basis_vector(b)}
            )
            lhs = wedge_rel(alpha, star, pairing)
            left = lhs.coeffs.get(full, [ZERO])[0]
            right = b_alt(alpha, f) * vol
            if left != right:
                raise SingularPairing(
                    "hodge dual failed re-verification at "
                    f"alpha = {render_multi_index(I)} x basis {b}"
                )


# -- brute-force reference implementations (oracles for the shuffle sums) ----


def brute_wedge_rel(f: AltMap, g: AltMap, pairing: PairingSpec) -> AltMap:
    """Full S_{p+q} sum divided by p! q!; must equal wedge_rel exactly."""
    p, q = f.degree, g.degree
    n = f.domain.dim
    result = AltMap(f.domain, pairing.result, p + q)
    if p + q > n:
        return result
    norm = ONE / Frac.from_int(_factorial(p) * _factorial(q))
    for T in all_multi_indices(n, p + q):
        acc = [ZERO] * pairing.result.dim
        for perm in permutations(range(p + q)):
            sign = _perm_sign(perm)
            fargs = [f.domain.basis_vector(T[perm[r]] - 1) for r in range(p)]
            gargs = [f.domain.basis_vector(T[perm[p + r]] - 1) for r in range(q)]
            val = pairing.apply(f.evaluate(fargs), g.evaluate(gargs))
            if sign > 0:
                acc = [a + v for a, v in zip(acc, val)]
            else:
                acc = [a - v for a, v in zip(acc, val)]
        acc = [norm * a for a in acc]
        if any(c.num for c in acc):
            result.coeffs[T] = acc
    return result


def brute_compose(f: AltMap, g: AltMap) -> AltMap:
    """Full S_{pq} sum divided by (q!)^p; must equal compose exactly."""
    p, q = f.degree, g.degree
    n = g.domain.dim
    result = AltMap(g.domain, f.codomain, p * q)
    if p * q > n:
        return result
    norm = ONE / Frac.from_int(_factorial(q) ** p)
    for T in all_multi_indices(n, p * q):
        acc = [ZERO] * f.codomain.dim
        for perm in permutations(range(p * q)):
            sign = _perm_sign(perm)
            gvals = []
            for b in range(p):
                args = [
                    g.domain.basis_vector(T[perm[b * q + r]] - 1) for r in range(q)
                ]
                gvals.append(g.evaluate(args))
            val = f.evaluate(gvals)
            if sign > 0:
                acc = [a + v for a, v in zip(acc, val)]
            else:
                acc = [a - v for a, v in zip(acc, val)]
        acc = [norm * a for a in acc]
        if any(c.num for c in acc):
            result.coeffs[T] = acc
    return result


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    inv = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inv += 1
    return -1 if inv % 2 else 1


# -- scalar-valued maps as dual exterior elements -----------------------------


def as_dual_element(f: AltMap) -> ExteriorElement:
    """View a scalar-valued AltMap as an element of Lambda^p(V*)."""
    if f.codomain.dim != 1:
        raise ShapeMismatch("only scalar-valued maps are dual exterior elements")
    coeffs = {index: vec[0] for index, vec in f.coeffs.items()}
    return ExteriorElement(f.domain, f.degree, coeffs, dual=True)


def from_dual_element(x: ExteriorElement, scalar: QuadraticSpace) -> AltMap:
    """Inverse of as_dual_element."""
    if not x.dual:
        raise ShapeMismatch("expected a dual exterior element")
    coeffs = {index: [c] for index, c in x.coeffs.items()}
    return AltMap(x.space, scalar, x.degree, coeffs)
