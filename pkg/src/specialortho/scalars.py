"""Exact arithmetic in the rational function field Q(l1, l2, l3, a).

Everything the library computes is a ``Frac``: a reduced fraction of sparse
integer polynomials in the four fixed variables.  There is no floating point
anywhere; equality of scalars is equality in the field.

Representation.  A polynomial is a dict mapping a packed exponent key to a
nonzero int coefficient.  The key packs the four exponents in 16-bit slots,
``e(l1) | e(l2)<<16 | e(l3)<<32 | e(a)<<48``, so monomial multiplication is
integer addition of keys.  Monomials are ordered by total degree, ties broken
by the packed key itself (which makes ``a`` weigh heaviest, then l3, l2, l1).

Canonical form.  gcd(num, den) is a unit, and the leading coefficient of the
denominator is positive.  Two Fracs are equal in the field iff their dicts
are equal, so ``==`` and ``hash`` are structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import DenominatorVanishes, DivisionByZero, ParseError, SingularMatrix

VARS = ("l1", "l2", "l3", "a")
_VAR_INDEX = {name: i for i, name in enumerate(VARS)}
_SHIFT = 16
_MASK = (1 << _SHIFT) - 1

_P_ZERO: dict = {}
_P_ONE = {0: 1}

# ---------------------------------------------------------------------------
# polynomial layer: dict[int, int], no zero coefficients stored
# ---------------------------------------------------------------------------


def _key_degree(key: int) -> int:
    return (key & _MASK) + ((key >> 16) & _MASK) + ((key >> 32) & _MASK) + (key >> 48)


def _grlex(key: int) -> tuple[int, int]:
    return (_key_degree(key), key)


def _lead_key(p: dict) -> int:
    return max(p, key=_grlex)


def _key_divides(kd: int, kn: int) -> bool:
    return (
        (kd & _MASK) <= (kn & _MASK)
        and ((kd >> 16) & _MASK) <= ((kn >> 16) & _MASK)
        and ((kd >> 32) & _MASK) <= ((kn >> 32) & _MASK)
        and (kd >> 48) <= (kn >> 48)
    )


def _key_min(k1: int, k2: int) -> int:
    out = 0
    for sh in (0, 16, 32, 48):
        out |= min((k1 >> sh) & _MASK, (k2 >> sh) & _MASK) << sh
    return out


def _p_neg(p: dict) -> dict:
    return {k: -c for k, c in p.items()}


def _p_add(a: dict, b: dict) -> dict:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def _p_sub(a: dict, b: dict) -> dict:
    if not b:
        return dict(a)
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        elif k in out:
            del out[k]
    return out


def _p_mul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    if len(a) == 1:
        (ka, ca), = a.items()
        if ka == 0 and ca == 1:
            return dict(b)
        return {kb + ka: cb * ca for kb, cb in b.items()}
    out: dict = {}
    get = out.get
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = get(k, 0) + ca * cb
            if v:
                out[k] = v
            elif k in out:
                del out[k]
    return out


def _p_int_mul(p: dict, n: int) -> dict:
    if n == 0:
        return {}
    if n == 1:
        return dict(p)
    return {k: c * n for k, c in p.items()}


def _p_divexact(num: dict, den: dict) -> dict:
    """Exact division num / den; den must divide num in Z[l1,l2,l3,a]."""
    if not num:
        return {}
    if len(den) == 1:
        (kd, cd), = den.items()
        if kd == 0 and cd == 1:
            return dict(num)
        out = {}
        for k, c in num.items():
            assert _key_divides(kd, k) and c % cd == 0, "inexact division"
            out[k - kd] = c // cd
        return out
    kd = _lead_key(den)
    cd = den[kd]
    r = dict(num)
    q: dict = {}
    while r:
        kr = _lead_key(r)
        cr = r[kr]
        assert _key_divides(kd, kr) and cr % cd == 0, "inexact division"
        k = kr - kd
        c = cr // cd
        q[k] = c
        for k2, c2 in den.items():
            kk = k2 + k
            v = r.get(kk, 0) - c * c2
            if v:
                r[kk] = v
            elif kk in r:
                del r[kk]
    return q


def _p_int_content(p: dict) -> int:
    g = 0
    for c in p.values():
        g = _int_gcd(g, c)
        if g == 1:
            return 1
    return g


def _p_mono_content_key(p: dict) -> int:
    it = iter(p)
    k = next(it)
    for k2 in it:
        if k == 0:
            return 0
        k = _key_min(k, k2)
    return k


def _sign_norm(p: dict) -> dict:
    if p and p[_lead_key(p)] < 0:
        return _p_neg(p)
    return dict(p)


# -- multivariate gcd: contents + primitive pseudo-remainder sequence --------


def _vars_present(p: dict) -> int:
    mask = 0
    for k in p:
        if k & _MASK:
            mask |= 1
        if (k >> 16) & _MASK:
            mask |= 2
        if (k >> 32) & _MASK:
            mask |= 4
        if k >> 48:
            mask |= 8
    return mask


def _to_recursive(p: dict, vi: int) -> dict:
    """Split p as a univariate poly in variable vi with packed-poly coefficients."""
    sh = 16 * vi
    out: dict = {}
    for k, c in p.items():
        d = (k >> sh) & _MASK
        rest = k - (d << sh)
        out.setdefault(d, {})[rest] = c
    return out


def _from_recursive(f: dict, vi: int) -> dict:
    sh = 16 * vi
    out: dict = {}
    for d, coeff in f.items():
        for k, c in coeff.items():
            out[k + (d << sh)] = c
    return out


def _coeffs_gcd(f: dict) -> dict:
    g: dict = {}
    for coeff in f.values():
        g = _p_gcd(g, coeff)
        if len(g) == 1 and 0 in g and g[0] == 1:
            return g
    return g


def _prem(F: dict, G: dict) -> dict:
    """Pseudo-remainder of F by G, both univariate with packed-poly coefficients."""
    dG = max(G)
    lG = G[dG]
    R = dict(F)
    while R:
        dR = max(R)
        if dR < dG:
            break
        lR = R[dR]
        new: dict = {}
        for d, c in R.items():
            if d != dR:
                new[d] = _p_mul(c, lG)
        for d, c in G.items():
            if d != dG:
                d2 = d + dR - dG
                v = _p_sub(new.get(d2, {}), _p_mul(c, lR))
                if v:
                    new[d2] = v
                elif d2 in new:
                    del new[d2]
        R = new
    return R


def _p_gcd(a: dict, b: dict) -> dict:
    """gcd in Z[l1,l2,l3,a], sign-normalized to a positive leading coefficient."""
    if not a:
        return _sign_norm(b)
    if not b:
        return _sign_norm(a)
    if a == b:
        return dict(a)
    if len(a) == 1 or len(b) == 1:
        g = _int_gcd(_p_int_content(a), _p_int_content(b))
        return {_key_min(_p_mono_content_key(a), _p_mono_content_key(b)): g}
    ca, cb = _p_int_content(a), _p_int_content(b)
    ka, kb = _p_mono_content_key(a), _p_mono_content_key(b)
    gc = _int_gcd(ca, cb)
    gk = _key_min(ka, kb)
    pa = {k - ka: c // ca for k, c in a.items()}
    pb = {k - kb: c // cb for k, c in b.items()}
    common = _vars_present(pa) & _vars_present(pb)
    if common == 0:
        return {gk: gc}
    vi = (common & -common).bit_length() - 1
    F = _to_recursive(pa, vi)
    G = _to_recursive(pb, vi)
    if max(F) < max(G):
        F, G = G, F
    contF = _coeffs_gcd(F)
    contG = _coeffs_gcd(G)
    cont = _p_gcd(contF, contG)
    F = {d: _p_divexact(c, contF) for d, c in F.items()}
    G = {d: _p_divexact(c, contG) for d, c in G.items()}
    while True:
        R = _prem(F, G)
        if not R:
            gpp = G
            break
        if max(R) == 0:
            gpp = {0: _P_ONE}
            break
        rc = _coeffs_gcd(R)
        F, G = G, {d: _p_divexact(c, rc) for d, c in R.items()}
    flat = _from_recursive(gpp, vi)
    fc = _p_int_content(flat)
    fk = _p_mono_content_key(flat)
    flat = {k - fk: c // fc for k, c in flat.items()}
    return _sign_norm(_p_mul({gk: gc}, flat))


def _p_lcm(a: dict, b: dict) -> dict:
    if a == b:
        return dict(a)
    return _sign_norm(_p_mul(a, _p_divexact(b, _p_gcd(a, b))))


# ---------------------------------------------------------------------------
# the field element
# ---------------------------------------------------------------------------

ScalarLike = Union["Frac", int]


class Frac:
    """A reduced fraction of integer polynomials; immutable by convention."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: dict, den: dict):
        if not den:
            raise DivisionByZero("denominator polynomial is zero")
        if not num:
            self.num, self.den = _P_ZERO, _P_ONE
        else:
            g = _p_gcd(num, den)
            if len(g) != 1 or 0 not in g or g[0] != 1:
                num = _p_divexact(num, g)
                den = _p_divexact(den, g)
            if den[_lead_key(den)] < 0:
                num = _p_neg(num)
                den = _p_neg(den)
            self.num, self.den = num, den
        self._hash = None

    @classmethod
    def _raw(cls, num: dict, den: dict) -> "Frac":
        """Skip normalization; caller guarantees the pair is already canonical."""
        self = object.__new__(cls)
        self.num, self.den = num, den
        self._hash = None
        return self

    @classmethod
    def from_int(cls, n: int) -> "Frac":
        if n == 0:
            return ZERO
        if n == 1:
            return ONE
        return cls._raw({0: n}, _P_ONE)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "Frac":
        if f == 0:
            return ZERO
        return cls._raw({0: f.numerator}, {0: f.denominator})

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _P_ONE and self.den == _P_ONE

    def is_constant(self) -> bool:
        return (not self.num or self.num.keys() == {0}) and self.den.keys() == {0}

    def lead_sign(self) -> int:
        """Sign of the leading numerator coefficient (denominator is positive)."""
        if not self.num:
            return 0
        return 1 if self.num[_lead_key(self.num)] > 0 else -1

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ParseError(f"not a constant: {self.render()}")
        return Fraction(self.num.get(0, 0), self.den[0])

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x: ScalarLike) -> "Frac":
        if isinstance(x, Frac):
            return x
        if isinstance(x, int):
            return Frac.from_int(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: ScalarLike) -> "Frac":
        other = Frac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == _P_ONE and d2 == _P_ONE:
            t = _p_add(n1, n2)
            return ZERO if not t else Frac._raw(t, _P_ONE)
        g0 = _p_gcd(d1, d2)
        if g0 == _P_ONE:
            t = _p_add(_p_mul(n1, d2), _p_mul(n2, d1))
            return ZERO if not t else Frac._raw(t, _p_mul(d1, d2))
        d1r = _p_divexact(d1, g0)
        d2r = _p_divexact(d2, g0)
        t = _p_add(_p_mul(n1, d2r), _p_mul(n2, d1r))
        if not t:
            return ZERO
        g1 = _p_gcd(t, g0)
        if g1 != _P_ONE:
            t = _p_divexact(t, g1)
            g0 = _p_divexact(g0, g1)
        return Frac._raw(t, _p_mul(_p_mul(d1r, g0), d2r))

    __radd__ = __add__

    def __neg__(self) -> "Frac":
        if not self.num:
            return self
        return Frac._raw(_p_neg(self.num), self.den)

    def __sub__(self, other: ScalarLike) -> "Frac":
        other = Frac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: ScalarLike) -> "Frac":
        return (-self).__add__(other)

    def __mul__(self, other: ScalarLike) -> "Frac":
        other = Frac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1 == _P_ONE and d2 == _P_ONE:
            return Frac._raw(_p_mul(n1, n2), _P_ONE)
        g1 = _p_gcd(n1, d2)
        if g1 != _P_ONE:
            n1 = _p_divexact(n1, g1)
            d2 = _p_divexact(d2, g1)
        g2 = _p_gcd(n2, d1)
        if g2 != _P_ONE:
            n2 = _p_divexact(n2, g2)
            d1 = _p_divexact(d1, g2)
        return Frac._raw(_p_mul(n1, n2), _p_mul(d1, d2))

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Frac":
        other = Frac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise DivisionByZero(f"division by zero scalar (numerator {self.render()})")
        num, den = other.den, other.num
        if den[_lead_key(den)] < 0:
            num, den = _p_neg(num), _p_neg(den)
        return self.__mul__(Frac._raw(num, den))

    def __rtruediv__(self, other: ScalarLike) -> "Frac":
        other = Frac._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n: int) -> "Frac":
        if n < 0:
            return ONE / self.__pow__(-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- structure ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Frac):
            return self.num == other.num and self.den == other.den
        if isinstance(other, int):
            return self.den == _P_ONE and (
                self.num == {0: other} if other else not self.num
            )
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(
                (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))
            )
            self._hash = h
        return h

    def substitute(self, bindings: Mapping[str, Union[int, str, Fraction]]) -> "Frac":
        """Evaluate some variables at rational values; the rest stay symbolic.

        Raises DenominatorVanishes if the denominator becomes identically zero.
        """
        subs: dict[int, Fraction] = {}
        for name, value in bindings.items():
            if name not in _VAR_INDEX:
                raise ParseError(f"unknown variable {name!r}")
            subs[_VAR_INDEX[name]] = Fraction(value)
        if not subs:
            return self
        dp, dd = _p_substitute(self.den, subs)
        if not dp:
            raise DenominatorVanishes(
                f"denominator of {self.render()} vanishes under "
                + ", ".join(f"{k}={v}" for k, v in sorted(bindings.items()))
            )
        np_, nd = _p_substitute(self.num, subs)
        return Frac(_p_int_mul(np_, dd), _p_int_mul(dp, nd))

    def render(self) -> str:
        num = _render_poly(self.num)
        if self.den == _P_ONE:
            return num
        den = _render_poly(self.den)
        if len(self.num) > 1:
            num = f"({num})"
        if not _is_safe_denominator(self.den):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self) -> str:
        return self.render()


def _p_substitute(p: dict, subs: dict[int, Fraction]) -> tuple[dict, int]:
    """Evaluate; returns (integer polynomial, positive integer denominator)."""
    acc: dict[int, Fraction] = {}
    for key, c in p.items():
        val = Fraction(c)
        newkey = key
        for vi, fv in subs.items():
            sh = 16 * vi
            e = (key >> sh) & _MASK
            if e:
                val *= fv**e
                newkey -= e << sh
        if val:
            prev = acc.get(newkey)
            tot = val if prev is None else prev + val
            if tot:
                acc[newkey] = tot
            elif newkey in acc:
                del acc[newkey]
    den = 1
    for v in acc.values():
        den = den * v.denominator // _int_gcd(den, v.denominator)
    return {k: int(v * den) for k, v in acc.items()}, den


ZERO = Frac._raw(_P_ZERO, _P_ONE)
ONE = Frac._raw(_P_ONE, _P_ONE)
MINUS_ONE = Frac._raw({0: -1}, _P_ONE)


def var(name: str) -> Frac:
    if name not in _VAR_INDEX:
        raise ParseError(f"unknown variable {name!r}")
    return Frac._raw({1 << (16 * _VAR_INDEX[name]): 1}, _P_ONE)


L1, L2, L3, ALPHA = (var(n) for n in VARS)


def rat(p: int, q: int = 1) -> Frac:
    """Shorthand for the rational constant p/q."""
    return Frac.from_fraction(Fraction(p, q))


def arith(a: ScalarLike, b: ScalarLike, op: str) -> Frac:
    """Field operation dispatcher; op is one of '+', '-', '*', '/'."""
    a = Frac._coerce(a)
    b = Frac._coerce(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ParseError(f"unknown operation {op!r}")


def is_zero(x: ScalarLike) -> bool:
    return Frac._coerce(x).is_zero()


def substitute(x: Frac, bindings: Mapping[str, Union[int, str, Fraction]]) -> Frac:
    return x.substitute(bindings)


# ---------------------------------------------------------------------------
# rendering and parsing
# ---------------------------------------------------------------------------


def _render_term(key: int, coeff: int) -> str:
    parts = []
    for vi, name in enumerate(VARS):
        e = (key >> (16 * vi)) & _MASK
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    mag = abs(coeff)
    if not parts:
        return str(mag)
    if mag == 1:
        return "*".join(parts)
    return str(mag) + "*" + "*".join(parts)


def _render_poly(p: dict) -> str:
    if not p:
        return "0"
    keys = sorted(p, key=_grlex, reverse=True)
    out = []
    for i, k in enumerate(keys):
        c = p[k]
        body = _render_term(k, c)
        if i == 0:
            out.append("-" + body if c < 0 else body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def _is_safe_denominator(p: dict) -> bool:
    """True when the rendered polynomial can follow '/' without parentheses."""
    if len(p) != 1:
        return False
    (k, c), = p.items()
    if c < 0:
        return False
    if k == 0:
        return True
    # a bare variable power like l1^2 is safe; a product or 2*a is not
    if c != 1:
        return False
    return sum(1 for sh in (0, 16, 32, 48) if (k >> sh) & _MASK) == 1


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"bad character at {text[pos:]!r}")
            break
        if m.group(1) is not None:
            tokens.append(int(m.group(1)))
        elif m.group(2) is not None:
            tokens.append(m.group(2))
        else:
            tokens.append("^" if m.group(3) == "**" else m.group(3))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expr(self) -> Frac:
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Frac:
        value = self.factor()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def factor(self) -> Frac:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        if self.peek() == "+":
            self.take()
            return self.factor()
        value = self.atom()
        if self.peek() == "^":
            self.take()
            exp = self.take()
            if not isinstance(exp, int):
                raise ParseError("exponent must be a nonnegative integer")
            value = value**exp
        return value

    def atom(self) -> Frac:
        tok = self.take()
        if tok is None:
            raise ParseError("unexpected end of expression")
        if isinstance(tok, int):
            return Frac.from_int(tok)
        if tok == "(":
            value = self.expr()
            if self.take() != ")":
                raise ParseError("missing closing parenthesis")
            return value
        if isinstance(tok, str) and tok in _VAR_INDEX:
            return var(tok)
        raise ParseError(f"unexpected token {tok!r}")


def parse(text: str) -> Frac:
    """Parse an expression in l1, l2, l3, a with + - * / ^ and parentheses."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty expression")
    parser = _Parser(tokens)
    value = parser.expr()
    if parser.pos != len(tokens):
        raise ParseError(f"trailing tokens at {tokens[parser.pos:]!r}")
    return value


def render(x: Frac) -> str:
    return x.render()


# ---------------------------------------------------------------------------
# exact linear solving (fraction-free Bareiss elimination)
# ---------------------------------------------------------------------------


def _rows_to_polys(matrix: Sequence[Sequence[Frac]], columns: Sequence[Sequence[Frac]]):
    """Clear denominators row by row; returns integer-polynomial rows."""
    n = len(matrix)
    rows = []
    for i in range(n):
        entries = list(matrix[i]) + [col[i] for col in columns]
        lcm = _P_ONE
        for f in entries:
            if f.den != _P_ONE:
                lcm = _p_lcm(lcm, f.den)
        if lcm == _P_ONE:
            rows.append([f.num for f in entries])
        else:
            rows.append(
                [_p_mul(f.num, _p_divexact(lcm, f.den)) for f in entries]
            )
    return rows


def solve_linear(
    matrix: Sequence[Sequence[Frac]],
    rhs: Union[Sequence[Frac], Sequence[Sequence[Frac]]],
):
    """Solve A x = b exactly for one vector b or a list of column vectors.

    Uses fraction-free Bareiss elimination on denominator-cleared rows, then
    back-substitutes in the field.  Raises SingularMatrix when no pivot is
    available.  With a single vector rhs returns one solution vector; with a
    list of columns returns the list of solution vectors in the same order.
    """
    n = len(matrix)
    if n == 0:
        return []
    if any(len(row) != n for row in matrix):
        raise SingularMatrix("matrix is not square")
    single = bool(rhs) and isinstance(rhs[0], Frac)
    columns = [list(rhs)] if single else [list(c) for c in rhs]  # type: ignore[arg-type]
    for c in columns:
        if len(c) != n:
            raise SingularMatrix("right-hand side has wrong length")
    width = n + len(columns)
    aug = _rows_to_polys(matrix, columns)
    prev = _P_ONE
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k]), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {k}")
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
        pk = aug[k][k]
        for i in range(k + 1, n):
            rik = aug[i][k]
            row_i = aug[i]
            row_k = aug[k]
            if rik:
                for j in range(k + 1, width):
                    num = _p_sub(_p_mul(pk, row_i[j]), _p_mul(rik, row_k[j]))
                    row_i[j] = _p_divexact(num, prev) if prev != _P_ONE else num
            elif prev != _P_ONE:
                for j in range(k + 1, width):
                    if row_i[j]:
                        row_i[j] = _p_divexact(_p_mul(pk, row_i[j]), prev)
            else:
                for j in range(k + 1, width):
                    if row_i[j]:
                        row_i[j] = _p_mul(pk, row_i[j])
            row_i[k] = {}
        prev = pk
    solutions = []
    for c in range(len(columns)):
        x: list[Frac] = [ZERO] * n
        for i in range(n - 1, -1, -1):
            s = Frac(aug[i][n + c], _P_ONE) if aug[i][n + c] else ZERO
            for j in range(i + 1, n):
                if aug[i][j] and not x[j].is_zero():
                    s = s - Frac(aug[i][j], _P_ONE) * x[j]
            x[i] = s / Frac(aug[i][i], _P_ONE)
        solutions.append(x)
    return solutions[0] if single else solutions


def lcm_den(values: Iterable[Frac]) -> dict:
    """Least common multiple of the denominators, as an integer polynomial."""
    out = _P_ONE
    for f in values:
        if f.den != _P_ONE:
            out = _p_lcm(out, f.den)
    return out
