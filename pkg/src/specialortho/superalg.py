"""Lie superalgebras from special orthogonal moment maps.

Given a quadratic representation whose moment map is special orthogonal, the
space g + sl2 + V (x) k^2 closes into a Lie superalgebra: the even part acts
on the odd part through rho and the defining plane, and the odd bracket is

    {v (x) a, w (x) b} = omega(a, b) mu(v, w) + (v, w) mu_s(a, b)

up to one global scale solved from invariance of the supersymmetric form.
The three orthogonal families produce D(2,1;alpha) from the tensor product
of symplectic planes, the 17|14-dimensional algebra from the imaginary
octonions, and the 24|16-dimensional one from the full octonions.  The
graded Jacobi identity in the all-odd sector is equivalent to the special
condition; the other sectors hold for any moment map.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional, Sequence

from .altmap import AltMap
from .errors import NotSpecial, ParseError, ShapeMismatch
from .family import (
    mu_plane,
    omega_plane,
    sl2_bracket_table,
    sl2_half_trace_gram,
    sl2_plane_action,
)
from .quadlie import QuadLieRep, check_special
from .scalars import Frac, ONE, ZERO, parse as parse_scalar

Vector = list[Frac]
Matrix = list[list[Frac]]

_SECTORS = ("EEE", "EEO", "EOO", "OOO")


class SuperAlgebra:
    """Finite-dimensional Lie superalgebra with a supersymmetric form.

    Brackets are stored for index pairs i <= j over the concatenated
    even + odd basis; the accessor supplies super-antisymmetry.  The form is
    a full matrix, block-diagonal across the parity split, symmetric on the
    even part and antisymmetric on the odd part.
    """

    def __init__(
        self,
        name: str,
        even_labels: Sequence[str],
        odd_labels: Sequence[str],
        brackets: dict,
        form: Matrix,
    ):
        self.name = name
        self.even_labels = tuple(even_labels)
        self.odd_labels = tuple(odd_labels)
        self.even_dim = len(self.even_labels)
        self.odd_dim = len(self.odd_labels)
        self.dim = self.even_dim + self.odd_dim
        self.labels = self.even_labels + self.odd_labels
        if len(form) != self.dim or any(len(r) != self.dim for r in form):
            raise ShapeMismatch("form matrix must cover the full basis")
        self.form = [list(r) for r in form]
        for i in range(self.dim):
            for j in range(self.dim):
                if self.parity(i) != self.parity(j) and self.form[i][j].num:
                    raise ShapeMismatch("form must vanish across the parity split")
                want = self.form[j][i]
                if self.parity(i) and self.parity(j):
                    want = -want
                if self.form[i][j] != want:
                    raise ShapeMismatch("form is not supersymmetric")
        self._table: dict[tuple[int, int], dict[int, Frac]] = {}
        for (i, j), row in brackets.items():
            if i > j:
                raise ShapeMismatch("bracket keys must be non-decreasing pairs")
            if i == j and not self.parity(i):
                raise ShapeMismatch("an even element brackets itself to zero")
            cleaned = {k: c for k, c in row.items() if c.num}
            if cleaned:
                self._table[(i, j)] = cleaned
        self.odd_odd_scale: Optional[Frac] = None

    def parity(self, i: int) -> int:
        return 0 if i < self.even_dim else 1

    def bracket(self, i: int, j: int) -> dict[int, Frac]:
        if i <= j:
            return self._table.get((i, j), {})
        row = self._table.get((j, i), {})
        if not row:
            return {}
        if self.parity(i) and self.parity(j):
            return dict(row)
        return {k: -c for k, c in row.items()}

    # -- checks ---------------------------------------------------------

    def super_jacobi_check(self) -> dict:
        """First witness per parity sector of the graded Jacobi identity.

        J(x,y,z) = [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|} [y,[x,z]] over all
        basis x and pairs y <= z; a None entry means the sector is clean.
        """
        out: dict[str, Optional[str]] = {s: None for s in _SECTORS}
        n = self.dim
        for x in range(n):
            px = self.parity(x)
            for y in range(n):
                py = self.parity(y)
                sign_xy = -ONE if px and py else ONE
                row_xy = self.bracket(x, y)
                for z in range(y, n):
                    sector = _SECTORS[px + py + self.parity(z)]
                    if out[sector] is not None:
                        continue
                    acc: dict[int, Frac] = {}
                    for m, c in self.bracket(y, z).items():
                        for k, v in self.bracket(x, m).items():
                            s = acc.get(k, ZERO) + c * v
                            if s.num:
                                acc[k] = s
                            else:
                                acc.pop(k, None)
                    for m, c in row_xy.items():
                        for k, v in self.bracket(m, z).items():
                            s = acc.get(k, ZERO) - c * v
                            if s.num:
                                acc[k] = s
                            else:
                                acc.pop(k, None)
                    for m, c in self.bracket(x, z).items():
                        for k, v in self.bracket(y, m).items():
                            s = acc.get(k, ZERO) - sign_xy * c * v
                            if s.num:
                                acc[k] = s
                            else:
                                acc.pop(k, None)
                    if acc:
                        out[sector] = (
                            f"J({self.labels[x]}, {self.labels[y]}, "
                            f"{self.labels[z]}) != 0"
                        )
        return out

    def form_invariance_witness(self) -> Optional[str]:
        """B([x,y],z) = B(x,[y,z]) over all basis triples, or a witness."""
        n = self.dim
        for x in range(n):
            form_x = self.form[x]
            for y in range(n):
                row_xy = self.bracket(x, y)
                for z in range(n):
                    left = ZERO
                    for m, c in row_xy.items():
                        if self.form[m][z].num:
                            left = left + c * self.form[m][z]
                    right = ZERO
                    for m, c in self.bracket(y, z).items():
                        if form_x[m].num:
                            right = right + c * form_x[m]
                    if left != right:
                        return (
                            f"B([{self.labels[x]},{self.labels[y]}],"
                            f"{self.labels[z]}) != B({self.labels[x]},"
                            f"[{self.labels[y]},{self.labels[z]}])"
                        )
        return None

    def __repr__(self) -> str:
        return f"SuperAlgebra({self.name}: {self.even_dim}|{self.odd_dim})"


def build_tilde(
    rep: QuadLieRep,
    mu: AltMap,
    name: str,
    force: bool = False,
    sl2_form_scale: Frac = ONE,
) -> SuperAlgebra:
    """Assemble g + sl2 + V (x) k^2 from a representation and moment map.

    Raises NotSpecial unless the moment map satisfies the special condition;
    force=True builds anyway (the all-odd Jacobi sector then records the
    failure).  sl2_form_scale perturbs the sl2 block of the form and exists
    for sensitivity controls; any value other than 1 must be caught by
    form_invariance_witness.
    """
    special, witness = check_special(rep, mu)
    if not special and not force:
        raise NotSpecial(f"moment map is not special orthogonal at {witness}")
    g_dim = rep.dim
    v_dim = rep.space.dim
    even_dim = g_dim + 3
    even_labels = list(rep.algebra_space.labels) + ["h", "e", "f"]
    odd_labels = [
        f"{rep.space.labels[i]}*a{s+1}" for i in range(v_dim) for s in range(2)
    ]

    def odd_index(i: int, s: int) -> int:
        return even_dim + 2 * i + s

    brackets: dict[tuple[int, int], dict[int, Frac]] = {}
    for (i, j), row in rep._table.items():
        brackets[(i, j)] = dict(row)
    for (i, j), row in sl2_bracket_table().items():
        brackets[(g_dim + i, g_dim + j)] = {g_dim + k: c for k, c in row.items()}
    # even-odd: g through the action, sl2 through the defining plane
    for a in range(g_dim):
        mat = rep.action[a]
        for i in range(v_dim):
            for s in range(2):
                row_s = {
                    odd_index(r, s): mat[r][i] for r in range(v_dim) if mat[r][i].num
                }
                if row_s:
                    brackets[(a, odd_index(i, s))] = row_s
    plane = sl2_plane_action()
    for t, mat in enumerate(plane):
        for i in range(v_dim):
            for s in range(2):
                row = {
                    odd_index(i, r): mat[r][s] for r in range(2) if mat[r][s].num
                }
                if row:
                    brackets[(g_dim + t, odd_index(i, s))] = row
    # unscaled odd-odd rows
    gram_v = rep.space.gram
    oo_rows: dict[tuple[int, int], dict[int, Frac]] = {}
    for i in range(v_dim):
        for s in range(2):
            p = odd_index(i, s)
            for j in range(i, v_dim):
                for t in range(2):
                    q = odd_index(j, t)
                    if q < p:
                        continue
                    row: dict[int, Frac] = {}
                    w = omega_plane(s, t)
                    if w.num and i != j:
                        vals = mu.value((i + 1, j + 1))
                        for k, c in enumerate(vals):
                            if c.num:
                                row[k] = w * c
                    b = gram_v[i][j]
                    if b.num:
                        for k, c in enumerate(mu_plane(s, t)):
                            if c.num:
                                s2 = row.get(g_dim + k, ZERO) + b * c
                                if s2.num:
                                    row[g_dim + k] = s2
                                else:
                                    row.pop(g_dim + k, None)
                    if row:
                        oo_rows[(p, q)] = row
    # the form: B_g, the scaled sl2 block, and (v, w) omega(a, b) on odd
    dim = even_dim + 2 * v_dim
    form = [[ZERO] * dim for _ in range(dim)]
    for i in range(g_dim):
        for j in range(g_dim):
            form[i][j] = rep.algebra_space.gram[i][j]
    s_gram = sl2_half_trace_gram()
    for i in range(3):
        for j in range(3):
            if s_gram[i][j].num:
                form[g_dim + i][g_dim + j] = sl2_form_scale * s_gram[i][j]
    for i in range(v_dim):
        for j in range(v_dim):
            if not gram_v[i][j].num:
                continue
            for s in range(2):
                for t in range(2):
                    w = omega_plane(s, t)
                    if w.num:
                        form[odd_index(i, s)][odd_index(j, t)] = gram_v[i][j] * w
    # solve the odd-odd scale from invariance: B(p, [q, x]) = c B(OO(p,q), x)
    scale = None
    for (p, q), row in sorted(oo_rows.items()):
        for x in range(even_dim):
            den = ZERO
            for m, c in row.items():
                if form[m][x].num:
                    den = den + c * form[m][x]
            if not den.num:
                continue
            # [q, x] = -[x, q] from the stored even-odd rows
            qx = brackets.get((x, q), {})
            num = ZERO
            for m, c in qx.items():
                if form[p][m].num:
                    num = num - c * form[p][m]
            scale = num / den
            break
        if scale is not None:
            break
    if scale is None:
        raise ShapeMismatch("could not normalize the odd bracket")
    for (p, q), row in oo_rows.items():
        scaled = {k: scale * c for k, c in row.items()}
        if scaled:
            brackets[(p, q)] = scaled
    out = SuperAlgebra(name, even_labels, odd_labels, brackets, form)
    out.odd_odd_scale = scale
    return out


def from_quad_rep(rep: QuadLieRep, name: str) -> SuperAlgebra:
    """Wrap a plain quadratic Lie algebra as a purely even superalgebra."""
    brackets = {key: dict(row) for key, row in rep._table.items()}
    return SuperAlgebra(
        name, rep.algebra_space.labels, (), brackets, rep.algebra_space.gram
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _canonical_payload(sa: SuperAlgebra) -> tuple[list, list]:
    brackets = []
    for (i, j) in sorted(sa._table):
        row = sa._table[(i, j)]
        brackets.append([i, j, [[k, row[k].render()] for k in sorted(row)]])
    form = [[c.render() for c in row] for row in sa.form]
    return brackets, form


def _digest(brackets: list, form: list) -> str:
    blob = json.dumps(
        {"brackets": brackets, "form": form}, separators=(",", ":"), sort_keys=True
    )
    return hashlib.sha256(blob.encode()).hexdigest()


def export_superalgebra(sa: SuperAlgebra, parameters: Optional[dict] = None) -> str:
    """Serialize to deterministic JSON with a content digest."""
    brackets, form = _canonical_payload(sa)
    doc = {
        "name": sa.name,
        "even_dim": sa.even_dim,
        "odd_dim": sa.odd_dim,
        "basis": {
            "even_basis": list(sa.even_labels),
            "odd_basis": list(sa.odd_labels),
        },
        "brackets": brackets,
        "form": form,
        "parameters": dict(parameters or {}),
        "digest": _digest(brackets, form),
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def import_superalgebra(text: str) -> SuperAlgebra:
    """Inverse of export_superalgebra; verifies the content digest."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e}") from None
    try:
        even_labels = doc["basis"]["even_basis"]
        odd_labels = doc["basis"]["odd_basis"]
        brackets = {}
        for i, j, row in doc["brackets"]:
            brackets[(i, j)] = {k: parse_scalar(c) for k, c in row}
        form = [[parse_scalar(c) for c in row] for row in doc["form"]]
        name = doc["name"]
        digest = doc["digest"]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed superalgebra document: {e}") from None
    sa = SuperAlgebra(name, even_labels, odd_labels, brackets, form)
    got_brackets, got_form = _canonical_payload(sa)
    if _digest(got_brackets, got_form) != digest:
        raise ParseError("digest mismatch: content was altered")
    if sa.even_dim != doc["even_dim"] or sa.odd_dim != doc["odd_dim"]:
        raise ParseError("declared dimensions do not match the basis")
    sa._imported_parameters = dict(doc.get("parameters", {}))
    return sa
