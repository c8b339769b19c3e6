"""Quadratic Lie algebra representations and their moment-map covariants.

A QuadLieRep packages an algebra with invariant form (as a QuadraticSpace),
its bracket table, and skew action matrices on a quadratic module.  The
moment map mu is solved from B_g(x, mu(v, w)) = B_V(rho(x) v, w); a moment
map is special orthogonal when

    mu(u, v) w + mu(u, w) v = (u, v) w + (u, w) v - 2 (v, w) u,

and in that case the degree-3 covariant psi and the degree-4 invariant Q
close the ladder of identities checked by mathews_status: the wedge and
composition identities relating mu, psi, Q, and the identity map.

The module also carries the closed-form values of these covariants on the
imaginary octonions and on the full octonions, and the decompositions of the
index-raised forms whose supports are Fano lines, their complements, and the
affine planes of the parallelepiped spanned by the three doubling steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Optional, Sequence

from . import linalg
from .altmap import AltMap, PairingSpec, compose, wedge_rel
from .clifford import CliffordAlgebra, CliffordElement, PAIR_MASKS
from .errors import ShapeMismatch, WrongDimension
from .exterior import QuadraticSpace, all_multi_indices, complement_index
from .octonions import (
    OctonionAlgebra,
    associative_form,
    associator,
    bilinear_B,
    commutator,
    cross_product,
)
from .scalars import Frac, ONE, ZERO, rat, solve_linear

Vector = list[Frac]
Matrix = list[list[Frac]]


class QuadLieRep:
    """A Lie algebra with invariant form acting skewly on a quadratic space."""

    def __init__(
        self,
        name: str,
        algebra_space: QuadraticSpace,
        bracket_table: dict,
        action: Sequence[Matrix],
        space: QuadraticSpace,
    ):
        self.name = name
        self.algebra_space = algebra_space
        self.space = space
        self.action = [
            [list(row) for row in m] for m in action
        ]
        if len(self.action) != algebra_space.dim:
            raise ShapeMismatch("one action matrix per algebra basis element")
        # bracket_table holds sparse rows {k: coeff} for pairs (i, j), i < j
        self._table: dict[tuple[int, int], dict[int, Frac]] = {}
        for (i, j), row in bracket_table.items():
            if i >= j:
                raise ShapeMismatch("bracket table keys must be increasing pairs")
            cleaned = {k: c for k, c in row.items() if c.num}
            if cleaned:
                self._table[(i, j)] = cleaned

    @property
    def dim(self) -> int:
        return self.algebra_space.dim

    def bracket(self, i: int, j: int) -> dict[int, Frac]:
        """Sparse coordinates of [x_i, x_j]."""
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), {}))
        row = self._table.get((j, i))
        return {k: -c for k, c in row.items()} if row else {}

    def bracket_sparse(self, x: dict, y: dict) -> dict:
        """Bracket of sparse coordinate vectors."""
        out: dict[int, Frac] = {}
        for i, a in x.items():
            if not a.num:
                continue
            for j, b in y.items():
                if not b.num:
                    continue
                row = self.bracket(i, j)
                if not row:
                    continue
                c = a * b
                for k, v in row.items():
                    s = out.get(k, ZERO) + c * v
                    if s.num:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def act_basis(self, a: int, k: int) -> Vector:
        """Action of algebra basis element a on module basis vector k."""
        m = self.action[a]
        return [m[r][k] for r in range(self.space.dim)]

    def act(self, coords: Sequence[Frac], vec: Sequence[Frac]) -> Vector:
        out = [ZERO] * self.space.dim
        for a, c in enumerate(coords):
            if not c.num:
                continue
            m = self.action[a]
            for r in range(self.space.dim):
                row = m[r]
                acc = out[r]
                for k, v in enumerate(vec):
                    if v.num and row[k].num:
                        acc = acc + c * row[k] * v
                out[r] = acc
        return out

    def act_sparse(self, coords: dict, vec: Sequence[Frac]) -> Vector:
        out = [ZERO] * self.space.dim
        for a, c in coords.items():
            if not c.num:
                continue
            m = self.action[a]
            for r in range(self.space.dim):
                row = m[r]
                acc = out[r]
                for k, v in enumerate(vec):
                    if v.num and row[k].num:
                        acc = acc + c * row[k] * v
                out[r] = acc
        return out

    # -- structural checks, each returning None or a witness string ----------

    def check_jacobi(self) -> Optional[str]:
        n = self.dim
        for i, j, k in combinations(range(n), 3):
            acc: dict[int, Frac] = {}
            for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket(y, z)
                for m, c in inner.items():
                    row = self.bracket(x, m)
                    for t, v in row.items():
                        s = acc.get(t, ZERO) + c * v
                        if s.num:
                            acc[t] = s
                        else:
                            acc.pop(t, None)
            if acc:
                labels = self.algebra_space.labels
                return f"[{labels[i]},[{labels[j]},{labels[k]}]] + cyclic != 0"
        return None

    def check_form_invariance(self) -> Optional[str]:
        gram = self.algebra_space.gram
        n = self.dim
        for i in range(n):
            for j, k in combinations(range(n), 2):
                left = ZERO
                for m, c in self.bracket(i, j).items():
                    if gram[m][k].num:
                        left = left + c * gram[m][k]
                right = ZERO
                for m, c in self.bracket(j, k).items():
                    if gram[i][m].num:
                        right = right + c * gram[i][m]
                if left != right:
                    labels = self.algebra_space.labels
                    return (
                        f"B([{labels[i]},{labels[j]}],{labels[k]}) != "
                        f"B({labels[i]},[{labels[j]},{labels[k]}])"
                    )
        return None

    def check_rep_property(self) -> Optional[str]:
        for i, j in combinations(range(self.dim), 2):
            expect = linalg.mat_sub(
                linalg.mat_mul(self.action[i], self.action[j]),
                linalg.mat_mul(self.action[j], self.action[i]),
            )
            got = linalg.zeros(self.space.dim, self.space.dim)
            for k, c in self.bracket(i, j).items():
                got = linalg.mat_add(got, linalg.mat_scale(self.action[k], c))
            if not linalg.mat_eq(expect, got):
                labels = self.algebra_space.labels
                return f"rho([{labels[i]},{labels[j]}]) != [rho {labels[i]}, rho {labels[j]}]"
        return None

    def check_action_skew(self) -> Optional[str]:
        for a in range(self.dim):
            m = self.action[a]
            for i in range(self.space.dim):
                for j in range(i, self.space.dim):
                    left = self.space.pair(self.act_basis(a, i), self.space.basis_vector(j))
                    right = self.space.pair(self.space.basis_vector(i), self.act_basis(a, j))
                    if left != -right:
                        return (
                            f"B(rho({self.algebra_space.labels[a]}) e{i+1}, e{j+1}) "
                            "is not skew"
                        )
        return None

    def __repr__(self) -> str:
        return (
            f"QuadLieRep({self.name}: dim {self.dim} acting on "
            f"{self.space.name} dim {self.space.dim})"
        )


# ---------------------------------------------------------------------------
# canonical so(V) data
# ---------------------------------------------------------------------------


def mu_can_value(space: QuadraticSpace, i: int, j: int, k: int) -> Vector:
    """mu_can(e_i, e_j) e_k = (e_i, e_k) e_j - (e_j, e_k) e_i (0-based)."""
    out = [ZERO] * space.dim
    bik = space.gram[i][k]
    bjk = space.gram[j][k]
    if bik.num:
        out[j] = out[j] + bik
    if bjk.num:
        out[i] = out[i] - bjk
    return out


def mu_can_apply(
    space: QuadraticSpace, u: Sequence[Frac], v: Sequence[Frac], w: Sequence[Frac]
) -> Vector:
    """mu_can(u, v) w = (u, w) v - (v, w) u on coordinate vectors."""
    a = space.pair(u, w)
    b = space.pair(v, w)
    return [a * y - b * x for x, y in zip(u, v)]


def build_so(space: QuadraticSpace) -> tuple[QuadLieRep, AltMap]:
    """Fundamental representation of so(V) and the canonical moment map.

    The algebra basis is M_ij = mu_can(e_i, e_j) over increasing pairs, the
    form is -Tr(xy)/2, brackets come from matrix commutators re-expressed in
    the basis.  Returns the representation together with mu_can as a map
    Lambda^2 V -> so(V), whose coefficients are exactly the basis vectors.
    """
    n = space.dim
    pairs = list(combinations(range(n), 2))
    mats = []
    for i, j in pairs:
        m = [[ZERO] * n for _ in range(n)]
        for k in range(n):
            col = mu_can_value(space, i, j, k)
            for r in range(n):
                if col[r].num:
                    m[r][k] = col[r]
        mats.append(m)
    flat = [[m[r][c] for r in range(n) for c in range(n)] for m in mats]
    coords = linalg.SubspaceCoords(flat, label="so basis")
    table = {}
    for a, b in combinations(range(len(pairs)), 2):
        comm = linalg.mat_sub(
            linalg.mat_mul(mats[a], mats[b]), linalg.mat_mul(mats[b], mats[a])
        )
        vec = coords.express([comm[r][c] for r in range(n) for c in range(n)])
        row = {k: c for k, c in enumerate(vec) if c.num}
        if row:
            table[(a, b)] = row
    gram = [
        [
            -linalg.trace(linalg.mat_mul(mats[a], mats[b])) / rat(2)
            for b in range(len(pairs))
        ]
        for a in range(len(pairs))
    ]
    labels = tuple(f"M{i+1}{j+1}" for i, j in pairs)
    so_space = QuadraticSpace(labels, gram, name=f"so({space.name})")
    rep = QuadLieRep(f"so({space.name})", so_space, table, mats, space)
    coeffs = {}
    for t, (i, j) in enumerate(pairs):
        vec = [ZERO] * len(pairs)
        vec[t] = ONE
        coeffs[(i + 1, j + 1)] = vec
    mu = AltMap(space, so_space, 2, coeffs, name="mu_can")
    return rep, mu


# ---------------------------------------------------------------------------
# moment maps and covariants
# ---------------------------------------------------------------------------


def moment_map(rep: QuadLieRep) -> AltMap:
    """Solve B_g(x_a, mu(e_i, e_j)) = B_V(rho(x_a) e_i, e_j) for all pairs."""
    space = rep.space
    indices = all_multi_indices(space.dim, 2)
    columns = []
    for i, j in indices:
        col = []
        for a in range(rep.dim):
            col.append(space.pair(rep.act_basis(a, i - 1), space.basis_vector(j - 1)))
        columns.append(col)
    solutions = solve_linear(rep.algebra_space.gram, columns)
    coeffs = {index: sol for index, sol in zip(indices, solutions)}
    return AltMap(space, rep.algebra_space, 2, coeffs, name=f"mu[{rep.name}]")


def moment_equivariance_witness(rep: QuadLieRep, mu: AltMap) -> Optional[str]:
    """mu(rho(x) v, w) + mu(v, rho(x) w) = [x, mu(v, w)] on basis triples."""
    space = rep.space
    n = space.dim
    for a in range(rep.dim):
        for i in range(n):
            vi = space.basis_vector(i)
            xvi = rep.act_basis(a, i)
            for j in range(i + 1, n):
                vj = space.basis_vector(j)
                xvj = rep.act_basis(a, j)
                lhs = [
                    p + q
                    for p, q in zip(mu.evaluate([xvi, vj]), mu.evaluate([vi, xvj]))
                ]
                mu_ij = {k: c for k, c in enumerate(mu.value((i + 1, j + 1))) if c.num}
                rhs_sparse = rep.bracket_sparse({a: ONE}, mu_ij)
                rhs = [ZERO] * rep.dim
                for k, c in rhs_sparse.items():
                    rhs[k] = c
                if lhs != rhs:
                    return (
                        f"equivariance fails at x={rep.algebra_space.labels[a]}, "
                        f"(v,w)=(e{i+1},e{j+1})"
                    )
    return None


def check_special(rep: QuadLieRep, mu: AltMap) -> tuple[bool, Optional[str]]:
    """Special orthogonality of the moment map, with the first witness.

    Checks mu(u,v) w + mu(u,w) v = (u,v) w + (u,w) v - 2 (v,w) u over basis
    triples in lexicographic order; returns (True, None) or (False, witness).
    """
    space = rep.space
    n = space.dim
    gram = space.gram
    basis = [space.basis_vector(k) for k in range(n)]
    for i in range(n):
        for j in range(n):
            mu_ij = mu.evaluate([basis[i], basis[j]])
            mu_ij_sparse = {k: c for k, c in enumerate(mu_ij) if c.num}
            for k in range(j, n):
                mu_ik = mu.evaluate([basis[i], basis[k]])
                mu_ik_sparse = {t: c for t, c in enumerate(mu_ik) if c.num}
                lhs = [
                    p + q
                    for p, q in zip(
                        rep.act_sparse(mu_ij_sparse, basis[k]),
                        rep.act_sparse(mu_ik_sparse, basis[j]),
                    )
                ]
                rhs = [ZERO] * n
                if gram[i][j].num:
                    rhs[k] = rhs[k] + gram[i][j]
                if gram[i][k].num:
                    rhs[j] = rhs[j] + gram[i][k]
                if gram[j][k].num:
                    rhs[i] = rhs[i] - rat(2) * gram[j][k]
                if lhs != rhs:
                    witness = (
                        f"(u,v,w) = (e{i+1}, e{j+1}, e{k+1}) of {space.name}"
                    )
                    return False, witness
    return True, None


@dataclass
class Covariants:
    """The moment map with its derived covariants on one representation."""

    rep: QuadLieRep
    mu: AltMap
    psi: AltMap
    quad: AltMap
    special: bool
    witness: Optional[str]
    scalar: QuadraticSpace


def covariants(rep: QuadLieRep, scalar: QuadraticSpace, mu: Optional[AltMap] = None) -> Covariants:
    """Moment map, degree-3 covariant, and degree-4 invariant of rep.

    psi(v1,v2,v3) = mu(v1,v2) v3 + mu(v3,v1) v2 + mu(v2,v3) v1 and Q is the
    alternating sum of (v, psi(...)) over the four cyclic deletions.  When the
    moment map is special the closed shortcuts psi = 3(mu - mu_can) and
    Q = 4 (v1, psi(v2,v3,v4)) are asserted against the definitions.
    """
    space = rep.space
    n = space.dim
    if mu is None:
        mu = moment_map(rep)
    basis = [space.basis_vector(k) for k in range(n)]

    def mu_act(i: int, j: int, k: int) -> Vector:
        coords = {t: c for t, c in enumerate(mu.evaluate([basis[i], basis[j]])) if c.num}
        return rep.act_sparse(coords, basis[k])

    psi_coeffs = {}
    for index in all_multi_indices(n, 3):
        i, j, k = (t - 1 for t in index)
        val = [
            a + b + c
            for a, b, c in zip(mu_act(i, j, k), mu_act(k, i, j), mu_act(j, k, i))
        ]
        psi_coeffs[index] = val
    psi = AltMap(space, space, 3, psi_coeffs, name=f"psi[{rep.name}]")

    quad_coeffs = {}
    for index in all_multi_indices(n, 4):
        i, j, k, l = (t - 1 for t in index)
        value = (
            space.pair(basis[i], psi.evaluate([basis[j], basis[k], basis[l]]))
            - space.pair(basis[l], psi.evaluate([basis[i], basis[j], basis[k]]))
            + space.pair(basis[k], psi.evaluate([basis[l], basis[i], basis[j]]))
            - space.pair(basis[j], psi.evaluate([basis[k], basis[l], basis[i]]))
        )
        quad_coeffs[index] = [value]
    quad = AltMap(space, scalar, 4, quad_coeffs, name=f"Q[{rep.name}]")

    special, witness = check_special(rep, mu)
    if special:
        three = rat(3)
        for index in all_multi_indices(n, 3):
            i, j, k = (t - 1 for t in index)
            shortcut = [
                three * (x - y)
                for x, y in zip(mu_act(i, j, k), mu_can_value(space, i, j, k))
            ]
            assert psi.value(index) == shortcut, "psi shortcut failed"
        four = rat(4)
        for index in all_multi_indices(n, 4):
            i, j, k, l = (t - 1 for t in index)
            shortcut = four * space.pair(
                basis[i], psi.evaluate([basis[j], basis[k], basis[l]])
            )
            assert quad.value(index) == [shortcut], "Q shortcut failed"
    return Covariants(rep, mu, psi, quad, special, witness, scalar)


# ---------------------------------------------------------------------------
# the ladder of wedge/composition identities
# ---------------------------------------------------------------------------


@dataclass
class LadderCheck:
    name: str
    statement: str
    status: str  # "holds" | "fails" | "vacuous"
    detail: str = ""


def mathews_status(cov: Covariants) -> list[LadderCheck]:
    """The four identities tying mu, psi, Q, and Id, with vacuity reporting."""
    rep, mu, psi, quad = cov.rep, cov.mu, cov.psi, cov.quad
    space, scalar = rep.space, cov.scalar
    n = space.dim
    ident = AltMap.identity(space)
    act_pair = PairingSpec.action(rep.algebra_space, space, rep.action)
    k_v = PairingSpec.scalar_multiply(scalar, space)
    k_g = PairingSpec.scalar_multiply(scalar, rep.algebra_space)
    k_k = PairingSpec.scalar_scalar(scalar)
    out = []

    def record(name: str, statement: str, degree: int, fn: Callable[[], bool]):
        if degree > n:
            out.append(
                LadderCheck(
                    name,
                    statement,
                    "vacuous",
                    "vacuously true (degree exceeds dimension)",
                )
            )
            return
        ok = fn()
        out.append(LadderCheck(name, statement, "holds" if ok else "fails"))

    record(
        "wedge-mu-psi",
        "mu ^_rho psi = -(3/2) Q ^ Id",
        5,
        lambda: wedge_rel(mu, psi, act_pair)
        == wedge_rel(quad, ident, k_v).scale(rat(-3, 2)),
    )
    record(
        "compose-mu-psi",
        "mu o psi = 3 Q ^ mu",
        6,
        lambda: compose(mu, psi) == wedge_rel(quad, mu, k_g).scale(rat(3)),
    )

    def quad_quad() -> AltMap:
        return wedge_rel(quad, quad, k_k)

    record(
        "compose-psi-psi",
        "psi o psi = -(27/2) Q ^ Q ^ Id",
        9,
        lambda: compose(psi, psi)
        == wedge_rel(quad_quad(), ident, k_v).scale(rat(-27, 2)),
    )
    record(
        "compose-quad-psi",
        "Q o psi = -54 Q ^ Q ^ Q",
        12,
        lambda: compose(quad, psi)
        == wedge_rel(quad_quad(), quad, k_k).scale(rat(-54)),
    )
    return out


# ---------------------------------------------------------------------------
# the two octonion representations
# ---------------------------------------------------------------------------


def _pair_trace_table(cliff: CliffordAlgebra) -> dict[tuple[int, int], Frac]:
    table = getattr(cliff, "_pair_traces", None)
    if table is None:
        table = {}
        elements = [CliffordElement(cliff, {m: ONE}) for m in PAIR_MASKS]
        for a, x in enumerate(elements):
            for b, y in enumerate(elements):
                if b < a:
                    table[(PAIR_MASKS[a], PAIR_MASKS[b])] = table[
                        (PAIR_MASKS[b], PAIR_MASKS[a])
                    ]
                    continue
                table[(PAIR_MASKS[a], PAIR_MASKS[b])] = cliff.trace_product(x, y)
        cliff._pair_traces = table
    return table


def _trace_pairing(cliff: CliffordAlgebra, x: CliffordElement, y: CliffordElement) -> Frac:
    """Tr(rho(x) rho(y)) for degree-2 elements via the cached monomial table."""
    table = _pair_trace_table(cliff)
    s = ZERO
    for mx, cx in x.coeffs.items():
        for my, cy in y.coeffs.items():
            t = table[(mx, my)]
            if t.num:
                s = s + cx * cy * t
    return s


def build_spinor_rep(cliff: CliffordAlgebra) -> QuadLieRep:
    """so(7) on the octonions: degree-2 monomials with form -(3/8) Tr.

    Brackets are half-commutators... the super bracket of two even monomials
    is the plain commutator, and on pair monomials it lands back in the span
    of pair monomials.
    """
    octs = cliff.octonions
    mask_pos = {m: t for t, m in enumerate(PAIR_MASKS)}
    table = {}
    for a in range(21):
        for b in range(a + 1, 21):
            xa = CliffordElement(cliff, {PAIR_MASKS[a]: ONE})
            xb = CliffordElement(cliff, {PAIR_MASKS[b]: ONE})
            comm = cliff.super_bracket(xa, xb)
            row = {}
            for mask, c in comm.coeffs.items():
                if mask not in mask_pos:
                    raise WrongDimension(
                        "commutator of pair monomials left the degree-2 span"
                    )
                row[mask_pos[mask]] = c
            if row:
                table[(a, b)] = row
    scale = rat(-3, 8)
    trace = _pair_trace_table(cliff)
    gram = [
        [scale * trace[(PAIR_MASKS[a], PAIR_MASKS[b])] for b in range(21)]
        for a in range(21)
    ]
    labels = tuple(
        "s" + "".join(str(i) for i in _mask_tuple(m)) for m in PAIR_MASKS
    )
    algebra_space = QuadraticSpace(labels, gram, name="so7")
    mats = [
        cliff.spinor_action(CliffordElement(cliff, {m: ONE})) for m in PAIR_MASKS
    ]
    return QuadLieRep("so7-spin", algebra_space, table, mats, octs.space_oct)


def _mask_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(7) if mask >> i & 1)


def build_g2_rep(cliff: CliffordAlgebra) -> tuple[QuadLieRep, list[CliffordElement]]:
    """The annihilator of the unit acting on imaginary octonions.

    Basis from the degree-2 kernel, brackets through coordinates over the
    pair monomials, invariant form -(1/3) Tr of the 7-dimensional action
    (which equals the 8-dimensional trace on the kernel), action matrices cut
    from the spin action after checking the unit row and column vanish.
    """
    octs = cliff.octonions
    kernel = cliff.g2_kernel()
    mask_pos = {m: t for t, m in enumerate(PAIR_MASKS)}

    def as_coords(x: CliffordElement) -> Vector:
        out = [ZERO] * 21
        for mask, c in x.coeffs.items():
            out[mask_pos[mask]] = c
        return out

    coords = linalg.SubspaceCoords([as_coords(x) for x in kernel], label="g2 kernel")
    table = {}
    for a in range(14):
        for b in range(a + 1, 14):
            comm = cliff.super_bracket(kernel[a], kernel[b])
            vec = coords.express(as_coords(comm))
            row = {k: c for k, c in enumerate(vec) if c.num}
            if row:
                table[(a, b)] = row
    third = rat(-1, 3)
    gram = [
        [third * _trace_pairing(cliff, kernel[a], kernel[b]) for b in range(14)]
        for a in range(14)
    ]
    labels = tuple(f"d{t+1}" for t in range(14))
    algebra_space = QuadraticSpace(labels, gram, name="g2")
    mats = []
    for x in kernel:
        full = cliff.spinor_action(x)
        for t in range(8):
            assert full[0][t].is_zero() and full[t][0].is_zero(), (
                "kernel element does not preserve the imaginary space"
            )
        mats.append([[full[r][c] for c in range(1, 8)] for r in range(1, 8)])
    rep = QuadLieRep("g2-im", algebra_space, table, mats, octs.space_im)
    return rep, kernel


# ---------------------------------------------------------------------------
# closed forms on the octonion modules
# ---------------------------------------------------------------------------


def psi_im_expected(octs: OctonionAlgebra) -> AltMap:
    """psi on imaginaries: -(3/4) of the associator."""
    coeffs = {}
    for index in all_multi_indices(7, 3):
        u, v, w = (octs.imaginary_unit(t) for t in index)
        val = associator(u, v, w).scale(rat(-3, 4))
        assert val.is_imaginary(), "associator of imaginaries must be imaginary"
        coeffs[index] = val.imaginary_coeffs()
    return AltMap(octs.space_im, octs.space_im, 3, coeffs, name="psi_im_closed")


def quad_im_expected(octs: OctonionAlgebra, scalar: QuadraticSpace) -> AltMap:
    """Q on imaginaries: -3 B(v1, (v2, v3, v4))."""
    coeffs = {}
    for index in all_multi_indices(7, 4):
        u1, u2, u3, u4 = (octs.imaginary_unit(t) for t in index)
        value = rat(-3) * bilinear_B(u1, associator(u2, u3, u4))
        coeffs[index] = [value]
    return AltMap(octs.space_im, scalar, 4, coeffs, name="quad_im_closed")


def psi_oct_expected(octs: OctonionAlgebra) -> AltMap:
    """psi on the octonions: -(1/2) associator plus the associative form
    times the unit on imaginary triples; -(v1 x v2) when the unit enters."""
    coeffs = {}
    for index in all_multi_indices(8, 3):
        if index[0] == 1:
            a, b = index[1] - 1, index[2] - 1
            u, v = octs.imaginary_unit(a), octs.imaginary_unit(b)
            # psi(1, u, v) = psi(u, v, 1) by cyclic evenness = -(u x v)
            val = -cross_product(u, v)
        else:
            u, v, w = (octs.imaginary_unit(t - 1) for t in index)
            val = associator(u, v, w).scale(rat(-1, 2)) + octs.one().scale(
                associative_form(u, v, w)
            )
        coeffs[index] = list(val.coeffs)
    return AltMap(octs.space_oct, octs.space_oct, 3, coeffs, name="psi_oct_closed")


def quad_oct_expected(octs: OctonionAlgebra, scalar: QuadraticSpace) -> AltMap:
    """Q on the octonions: (2/3) of the imaginary Q on imaginary quadruples,
    and Q(v1,v2,v3,1) = -4 phi(v1,v2,v3) when the unit enters."""
    coeffs = {}
    for index in all_multi_indices(8, 4):
        if index[0] == 1:
            u, v, w = (octs.imaginary_unit(t - 1) for t in index[1:])
            # moving the unit from slot 4 to slot 1 is an odd permutation
            value = rat(4) * associative_form(u, v, w)
        else:
            u1, u2, u3, u4 = (octs.imaginary_unit(t - 1) for t in index)
            value = rat(-2) * bilinear_B(u1, associator(u2, u3, u4))
        coeffs[index] = [value]
    return AltMap(octs.space_oct, scalar, 4, coeffs, name="quad_oct_closed")


def mu_im_pointwise_witness(octs: OctonionAlgebra, rep: QuadLieRep, mu: AltMap) -> Optional[str]:
    """mu(u, v) w = -(1/4)([w, [u, v]] + 3 (u, v, w)) on basis triples."""
    for i in range(1, 8):
        u = octs.imaginary_unit(i)
        for j in range(1, 8):
            v = octs.imaginary_unit(j)
            coords = {
                t: c
                for t, c in enumerate(
                    mu.evaluate(
                        [octs.space_im.basis_vector(i - 1), octs.space_im.basis_vector(j - 1)]
                    )
                )
                if c.num
            }
            for k in range(1, 8):
                w = octs.imaginary_unit(k)
                got = rep.act_sparse(coords, octs.space_im.basis_vector(k - 1))
                expect = (
                    commutator(w, commutator(u, v)) + associator(u, v, w).scale(rat(3))
                ).scale(rat(-1, 4))
                if got != expect.imaginary_coeffs():
                    return f"(u,v,w) = (e{i}, e{j}, e{k})"
    return None


def mu_im_canonical_split_witness(
    octs: OctonionAlgebra, rep: QuadLieRep, mu: AltMap
) -> Optional[str]:
    """mu(u, v) w = (3/2) mu_can(u, v) w + (1/8) [w, [u, v]] on basis triples."""
    space = octs.space_im
    for i in range(1, 8):
        u = octs.imaginary_unit(i)
        for j in range(1, 8):
            v = octs.imaginary_unit(j)
            coords = {
                t: c
                for t, c in enumerate(
                    mu.evaluate([space.basis_vector(i - 1), space.basis_vector(j - 1)])
                )
                if c.num
            }
            for k in range(1, 8):
                w = octs.imaginary_unit(k)
                got = rep.act_sparse(coords, space.basis_vector(k - 1))
                canonical = mu_can_apply(
                    space,
                    space.basis_vector(i - 1),
                    space.basis_vector(j - 1),
                    space.basis_vector(k - 1),
                )
                expect_oct = commutator(w, commutator(u, v)).scale(rat(1, 8))
                expect = [
                    rat(3, 2) * c + e
                    for c, e in zip(canonical, expect_oct.imaginary_coeffs())
                ]
                if got != expect:
                    return f"(u,v,w) = (e{i}, e{j}, e{k})"
    return None


def g2_cyclic_witness(octs: OctonionAlgebra, mu: AltMap) -> Optional[str]:
    """mu(u, v x w) + mu(v, w x u) + mu(w, u x v) = 0 on all basis triples."""
    space = octs.space_im
    for i in range(1, 8):
        u = octs.imaginary_unit(i)
        for j in range(1, 8):
            v = octs.imaginary_unit(j)
            for k in range(1, 8):
                w = octs.imaginary_unit(k)
                total = None
                for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
                    val = mu.evaluate(
                        [x.imaginary_coeffs(), cross_product(y, z).imaginary_coeffs()]
                    )
                    total = val if total is None else [p + q for p, q in zip(total, val)]
                if any(c.num for c in total):
                    return f"(u,v,w) = (e{i}, e{j}, e{k})"
    return None


def spinor_cyclic_witness(octs: OctonionAlgebra, mu: AltMap) -> Optional[str]:
    """mu(u, v x w) + cyclic = -(1/2) mu((u,v,w), 1) on all imaginary triples."""
    unit = octs.space_oct.basis_vector(0)
    for i in range(1, 8):
        u = octs.imaginary_unit(i)
        for j in range(1, 8):
            v = octs.imaginary_unit(j)
            for k in range(1, 8):
                w = octs.imaginary_unit(k)
                total = None
                for x, y, z in ((u, v, w), (v, w, u), (w, u, v)):
                    val = mu.evaluate([x.coeffs, cross_product(y, z).coeffs])
                    total = val if total is None else [p + q for p, q in zip(total, val)]
                rhs = mu.evaluate([associator(u, v, w).coeffs, unit])
                expect = [rat(-1, 2) * c for c in rhs]
                if total != expect:
                    return f"(u,v,w) = (e{i}, e{j}, e{k})"
    return None


def mu_oct_from_mu_im_witness(
    octs: OctonionAlgebra,
    cliff: CliffordAlgebra,
    kernel: list[CliffordElement],
    mu_im: AltMap,
    mu_oct: AltMap,
) -> Optional[str]:
    """mu_O(u, v) = (8/9) mu_Im(u, v) + (1/18) c_{u x v} inside the Clifford
    degree-2 component, and mu_O(u, 1) = (1/6) c_u, on basis elements."""

    def to_clifford(coords: Sequence[Frac], basis: list[CliffordElement]) -> CliffordElement:
        out = CliffordElement(cliff)
        for c, x in zip(coords, basis):
            if c.num:
                out = out + x.scale(c)
        return out

    pair_elements = cliff.pair_basis()
    for i in range(1, 8):
        u = octs.imaginary_unit(i)
        # stored coefficient is mu(1, u); the identity speaks of mu(u, 1)
        got_unit = to_clifford(mu_oct.value((1, i + 1)), pair_elements).scale(-ONE)
        expect_unit = cliff.c_of(u).scale(rat(1, 6))
        if not (got_unit - expect_unit).is_zero():
            return f"mu(e{i}, 1) != (1/6) c_(e{i})"
        for j in range(i + 1, 8):
            v = octs.imaginary_unit(j)
            got = to_clifford(mu_oct.value((i + 1, j + 1)), pair_elements)
            mu_im_cliff = to_clifford(mu_im.value((i, j)), kernel)
            expect = mu_im_cliff.scale(rat(8, 9)) + cliff.c_of(
                cross_product(u, v)
            ).scale(rat(1, 18))
            if not (got - expect).is_zero():
                return f"mu(e{i}, e{j}) decomposition fails"
    return None


# ---------------------------------------------------------------------------
# decompositions of the index-raised covariants
# ---------------------------------------------------------------------------


def is_affine_plane(labels: Sequence[int]) -> bool:
    """Whether four basis labels of the octonions form an affine plane of the
    doubling parallelepiped: their zero-based offsets xor to zero."""
    if len(labels) != 4 or len(set(labels)) != 4:
        return False
    acc = 0
    for x in labels:
        acc ^= x - 1
    return acc == 0


@dataclass
class DecompositionTerm:
    index: tuple[int, ...]
    coefficient: Frac
    annotation: str


def decompose_phi_dual(octs: OctonionAlgebra, scalar: QuadraticSpace) -> list[DecompositionTerm]:
    """The seven terms of the index-raised associative form, one per line."""
    from .altmap import as_dual_element
    from .exterior import eta_inv
    from .octonions import fano_lines, phi_as_altmap

    lines = {frozenset(l) for l in fano_lines(octs)}
    phi = phi_as_altmap(octs, scalar)
    raised = eta_inv(as_dual_element(phi))
    out = []
    for index in sorted(raised.coeffs):
        if frozenset(index) not in lines:
            raise WrongDimension(f"support {index} is not a line")
        out.append(
            DecompositionTerm(index, raised.coeffs[index], "line {%s}" % ",".join(map(str, index)))
        )
    if len(out) != 7:
        raise WrongDimension(f"expected 7 terms, found {len(out)}")
    return out


def decompose_quad_im(
    octs: OctonionAlgebra, quad: AltMap
) -> list[DecompositionTerm]:
    """The seven terms of the raised imaginary Q; supports are complements of
    lines."""
    from .exterior import eta_inv
    from .altmap import as_dual_element
    from .octonions import fano_lines

    lines = {frozenset(l) for l in fano_lines(octs)}
    raised = eta_inv(as_dual_element(quad))
    out = []
    for index in sorted(raised.coeffs):
        comp = complement_index(index, 7)
        if frozenset(comp) not in lines:
            raise WrongDimension(f"complement of {index} is not a line")
        out.append(
            DecompositionTerm(
                index,
                raised.coeffs[index],
                "complement of line {%s}" % ",".join(map(str, comp)),
            )
        )
    if len(out) != 7:
        raise WrongDimension(f"expected 7 terms, found {len(out)}")
    return out


def decompose_quad_oct(
    octs: OctonionAlgebra, quad: AltMap
) -> list[DecompositionTerm]:
    """The fourteen terms of the raised octonion Q; supports are the affine
    planes of the doubling parallelepiped."""
    from .exterior import eta_inv
    from .altmap import as_dual_element

    raised = eta_inv(as_dual_element(quad))
    out = []
    for index in sorted(raised.coeffs):
        if not is_affine_plane(index):
            raise WrongDimension(f"support {index} is not an affine plane")
        out.append(
            DecompositionTerm(
                index, raised.coeffs[index], "affine plane {%s}" % ",".join(map(str, index))
            )
        )
    if len(out) != 14:
        raise WrongDimension(f"expected 14 terms, found {len(out)}")
    return out
