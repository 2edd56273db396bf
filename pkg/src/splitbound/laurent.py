"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is a map from exponent tuples (one slot per variable, negative
entries allowed) to nonzero integers.  Term order is lexicographic in the
declaration order of the variables, which only matters for choosing normal
forms and running division.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ArityError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, nvars: int = 2):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(int(v) for v in e)
                    if len(e) != nvars:
                        raise ArityError(f"exponent {e} does not have {nvars} slots")
                    clean[e] = int(c)
        self.terms = clean
        self.nvars = nvars
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def const(cls, c: int, nvars: int = 2) -> "LaurentPoly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps: Sequence[int], c: int = 1) -> "LaurentPoly":
        return cls({tuple(exps): c}, len(exps))

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "LaurentPoly":
        e = [0] * nvars
        e[i] = power
        return cls({tuple(e): 1}, nvars)

    # -- basic protocol -----------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({render(self)!r})"

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.const(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")
        if other.nvars != self.nvars:
            raise ArityError(f"arity mismatch: {self.nvars} vs {other.nvars}")
        return other

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return _raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    del out[e]
        return _raw(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return _raw({tuple(-v * -k for v in e): c ** (-k)}, self.nvars)
        out = LaurentPoly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure ----------------------------------------------------
    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> tuple[int, ...]:
        return tuple(min(e[i] for e in self.terms) for i in range(self.nvars))

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        return _raw({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}, self.nvars)

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def evaluate_var_at_one(self, var: int) -> "LaurentPoly":
        """Substitute 1 for variable ``var``; the result has one slot fewer."""
        if not 0 <= var < self.nvars:
            raise ArityError(f"variable index {var} out of range")
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            k = e[:var] + e[var + 1:]
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.nvars - 1)

    def set_var_to_one(self, var: int) -> "LaurentPoly":
        """Substitute 1 for ``var`` but keep the arity (slot becomes 0)."""
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            k = e[:var] + (0,) + e[var + 1:]
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.nvars)

    def value_at_ones(self) -> int:
        return sum(self.terms.values())

    def substitute(self, images: Sequence[Sequence[int]], nvars: int) -> "LaurentPoly":
        """Monomial substitution x_i -> prod_j y_j^images[i][j]."""
        out: dict[tuple[int, ...], int] = {}
        for e, c in self.terms.items():
            k = [0] * nvars
            for i, a in enumerate(e):
                if a:
                    for j in range(nvars):
                        k[j] += a * images[i][j]
            k = tuple(k)
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, nvars)

    def invert_vars(self) -> "LaurentPoly":
        return _raw({tuple(-v for v in e): c for e, c in self.terms.items()}, self.nvars)

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g


def _raw(terms, nvars) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p.terms = terms
    p.nvars = nvars
    p._hash = None
    return p


def zero(nvars: int = 2) -> LaurentPoly:
    return _raw({}, nvars)


def one(nvars: int = 2) -> LaurentPoly:
    return LaurentPoly.const(1, nvars)


# ---------------------------------------------------------------------------
# normal forms and division


def normalize(p: LaurentPoly) -> LaurentPoly:
    """Representative modulo units: minimal exponent 0 in every variable and a
    positive lexicographically-leading coefficient.

    >>> s, t = LaurentPoly.var(0, 2), LaurentPoly.var(1, 2)
    >>> normalize(-(s ** -1) * t ** 2 * (1 - t + t * t)) == 1 - t + t * t
    True
    """
    if p.is_zero():
        return p
    mins = p.min_exponents()
    q = p.shift(tuple(-m for m in mins))
    if q.leading()[1] < 0:
        q = -q
    return q


def unit_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    return normalize(p) == normalize(q)


def exact_quotient(n: LaurentPoly, d: LaurentPoly) -> LaurentPoly | None:
    """``n / d`` in the integer Laurent ring, or None when it does not exist."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if n.nvars != d.nvars:
        raise ArityError("arity mismatch")
    if n.is_zero():
        return n
    mn, md = n.min_exponents(), d.min_exponents()
    n0 = n.shift(tuple(-v for v in mn)).terms
    d0 = d.shift(tuple(-v for v in md)).terms
    q = _poly_exact_div(n0, d0)
    if q is None:
        return None
    return _raw(q, n.nvars).shift(tuple(a - b for a, b in zip(mn, md)))


def _poly_exact_div(n: dict, d: dict) -> dict | None:
    lt_d = max(d)
    cd = d[lt_d]
    r = dict(n)
    q = {}
    while r:
        lt = max(r)
        c = r[lt]
        m = tuple(a - b for a, b in zip(lt, lt_d))
        if min(m) < 0 or c % cd:
            return None
        qc = c // cd
        q[m] = qc
        for e, v in d.items():
            k = tuple(a + b for a, b in zip(e, m))
            w = r.get(k, 0) - qc * v
            if w:
                r[k] = w
            else:
                r.pop(k, None)
    return q


def rational_divmod(n: LaurentPoly, d: LaurentPoly):
    """Division of the shifted ordinary polynomials over Q by one divisor.

    Returns ``(quotient, remainder)`` as dicts with Fraction coefficients,
    exponents measured from the minimal exponents of ``n`` and ``d``.  With a
    single divisor the remainder vanishes exactly when ``d`` divides ``n``
    in Q[x].
    """
    mn, md = n.min_exponents(), d.min_exponents()
    r = {e: Fraction(c) for e, c in n.shift(tuple(-v for v in mn)).terms.items()}
    dd = d.shift(tuple(-v for v in md)).terms
    lt_d = max(dd)
    cd = dd[lt_d]
    q: dict = {}
    rem: dict = {}
    while r:
        lt = max(r)
        c = r.pop(lt)
        m = tuple(a - b for a, b in zip(lt, lt_d))
        if min(m) < 0:
            rem[lt] = c
            continue
        qc = c / cd
        q[m] = q.get(m, 0) + qc
        for e, v in dd.items():
            if e == lt_d:
                continue
            k = tuple(a + b for a, b in zip(e, m))
            w = r.get(k, 0) - qc * v
            if w:
                r[k] = w
            else:
                r.pop(k, None)
    return q, rem


def divides(d: LaurentPoly, n: LaurentPoly) -> bool:
    """True iff ``n = d*q`` for some ``q`` in the integer Laurent ring.

    Both sides are shifted to ordinary polynomials; a zero remainder over Q
    gives the unique rational quotient, and divisibility over Z holds exactly
    when that quotient has integer coefficients (the monomials s, t do not
    divide the shifted polynomials, so no Laurent correction is needed).
    """
    if d.is_zero():
        raise ZeroDivisionError("divisor must be nonzero")
    if d.nvars != n.nvars:
        raise ArityError("arity mismatch")
    if n.is_zero():
        return True
    q, rem = rational_divmod(n, d)
    if rem:
        return False
    return all(c.denominator == 1 for c in q.values())


# ---------------------------------------------------------------------------
# determinants


def determinant(M: Sequence[Sequence[LaurentPoly]], nvars: int | None = None) -> LaurentPoly:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return one(nvars if nvars is not None else 2)
    if n <= 4:
        return cofactor_determinant(M)
    return bareiss_determinant(M)


def cofactor_determinant(M) -> LaurentPoly:
    n = len(M)
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    total = zero(M[0][0].nvars)
    for j in range(n):
        if M[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def bareiss_determinant(M) -> LaurentPoly:
    n = len(M)
    nv = M[0][0].nvars
    A = [list(row) for row in M]
    sign = 1
    prev = one(nv)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return zero(nv)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * piv - A[i][k] * A[k][j]
                q = exact_quotient(num, prev)
                if q is None:
                    raise ArithmeticError("Bareiss step was not exact")
                A[i][j] = q
            A[i][k] = zero(nv)
        prev = piv
    det = A[n - 1][n - 1]
    return det if sign > 0 else -det


# ---------------------------------------------------------------------------
# text formats


_TERM_RE = re.compile(r"([+-]?)(\d*)((?:\*?[A-Za-z]\w*(?:\^\{?-?\d+\}?)?)*)")


def parse_poly(text: str, names: Sequence[str] = ("s", "t")) -> LaurentPoly:
    """Parse human-written polynomials such as ``s^2t^4-st^4+2``.

    Variable names may run together (``st^2``) and may be longer than one
    character (``t1*t2^3``); the longest matching name wins.
    """
    nv = len(names)
    idx = {n: i for i, n in enumerate(names)}
    alt = "|".join(re.escape(n) for n in sorted(names, key=len, reverse=True))
    var_re = re.compile(r"\*?(" + alt + r"|[A-Za-z])(?:\^\{?(-?\d+)\}?)?")
    s = "".join(text.split())
    if s in ("", "0"):
        return zero(nv)
    out: dict[tuple[int, ...], int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:pos + 10]!r}")
        sign, coef, mono = m.groups()
        if not coef and not mono:
            raise ValueError(f"empty term near {s[pos:pos + 10]!r}")
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        e = [0] * nv
        done = 0
        for vm in var_re.finditer(mono):
            if vm.start() != done:
                raise ValueError(f"cannot parse monomial {mono!r}")
            done = vm.end()
            name, power = vm.group(1), vm.group(2)
            if name not in idx:
                raise ValueError(f"unknown variable {name!r}")
            e[idx[name]] += int(power) if power else 1
        k = tuple(e)
        out[k] = out.get(k, 0) + c
        pos = m.end()
    return LaurentPoly(out, nv)


def render(p: LaurentPoly, names: Sequence[str] | None = None) -> str:
    """Human form, highest total degree first: ``s^2t^4 - st^4 + 1``."""
    if names is None:
        names = ("s", "t") if p.nvars == 2 else ("t",) if p.nvars == 1 else tuple(
            f"t{i + 1}" for i in range(p.nvars))
    if p.is_zero():
        return "0"
    keys = sorted(p.terms, key=lambda e: (-sum(e), tuple(-v for v in e)))
    pieces = []
    for e in keys:
        c = p.terms[e]
        mono = "".join(
            names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a
        )
        mag = abs(c)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


def machine_format(p: LaurentPoly) -> str:
    """Sorted ``e1,e2,...:coefficient`` lines for golden files."""
    return "\n".join(
        ",".join(str(v) for v in e) + ":" + str(p.terms[e]) for e in sorted(p.terms)
    )


def parse_machine_format(text: str, nvars: int) -> LaurentPoly:
    out = {}
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        exps, coef = line.split(":")
        out[tuple(int(v) for v in exps.split(","))] = int(coef)
    return LaurentPoly(out, nvars)


def poly_product(polys: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    out = one(nvars)
    for p in polys:
        out = out * p
    return out
