"""Exact sparse polynomials over Q in the variables x, y (and u, v).

A :class:`Poly` keeps a dict from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients.  Two-variable polynomials stand in
for power series in k[[x,y]]; every test made on them (linear part,
membership in m^2, scalar multiples) only looks at low-order data that a
polynomial representative already determines.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, NamedTuple, Tuple, Union

from .errors import PolyError, PolySyntaxError

VARS = ("x", "y", "u", "v")

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial in ``nvars`` (2 or 4) variables."""

    __slots__ = ("_terms", "nvars", "_hash")

    def __init__(self, terms: Dict[Exponent, Scalar] | None = None, nvars: int = 2):
        if nvars not in (2, 4):
            raise PolyError(f"nvars must be 2 or 4, got {nvars}")
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise PolyError(f"bad exponent vector {exp} for nvars={nvars}")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self.nvars = nvars
        self._hash = None

    # constructors

    @classmethod
    def const(cls, c: Scalar, nvars: int = 2) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, name: str, nvars: int = 2) -> "Poly":
        idx = VARS.index(name)
        if idx >= nvars:
            raise PolyError(f"variable {name!r} not available with nvars={nvars}")
        exp = [0] * nvars
        exp[idx] = 1
        return cls({tuple(exp): 1}, nvars)

    @classmethod
    def zero(cls, nvars: int = 2) -> "Poly":
        return cls({}, nvars)

    # accessors

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def lift(self, nvars: int = 4) -> "Poly":
        """Embed into a ring with more variables (x, y -> x, y, u, v)."""
        if nvars < self.nvars:
            raise PolyError("cannot lift to fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return Poly({e + pad: c for e, c in self._terms.items()}, nvars)

    # arithmetic

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise PolyError(f"mismatched nvars: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self._terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(i + j for i, j in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = Poly.const(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nvars)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # printing

    def sorted_terms(self):
        """Terms by descending total degree, then descending lex exponent."""
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, (exp, c) in enumerate(self.sorted_terms()):
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            mono = "*".join(
                VARS[i] if e == 1 else f"{VARS[i]}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Poly({str(self)!r}, nvars={self.nvars})"


# parsing

class _Parser:
    # expr := ['+'|'-'] term (('+'|'-') term)*
    # term := factor ('*' factor)*
    # factor := atom ('^' integer)?
    # atom := integer ['/' integer] | variable | '(' expr ')'

    def __init__(self, text: str, nvars: int):
        self.text = text
        self.nvars = nvars
        self.pos = 0

    def error(self, msg):
        raise PolySyntaxError(msg, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Poly:
        if not self.text.strip():
            self.error("empty polynomial")
        p = self.expr()
        if self.peek():
            self.error(f"unexpected character {self.peek()!r}")
        return p

    def expr(self) -> Poly:
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.text[self.pos] == "-" else 1
            self.pos += 1
        p = self.term() * sign
        while self.peek() and self.peek() in "+-":
            op = self.text[self.pos]
            self.pos += 1
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.factor()
        while self.peek() == "*":
            self.pos += 1
            p = p * self.factor()
        return p

    def factor(self) -> Poly:
        p = self.atom()
        if self.peek() == "^":
            self.pos += 1
            p = p ** self.integer()
        return p

    def atom(self) -> Poly:
        ch = self.peek()
        if not ch:
            self.error("unexpected end of input")
        if ch.isdigit():
            num = self.integer()
            if self.peek() == "/":
                self.pos += 1
                den = self.integer()
                if den == 0:
                    self.error("zero denominator")
                return Poly.const(Fraction(num, den), self.nvars)
            return Poly.const(num, self.nvars)
        if ch == "(":
            self.pos += 1
            p = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return p
        if ch in VARS:
            if VARS.index(ch) >= self.nvars:
                self.error(f"variable {ch!r} not allowed with nvars={self.nvars}")
            self.pos += 1
            return Poly.var(ch, self.nvars)
        self.error(f"unexpected character {ch!r}")


def parse_poly(text: str, nvars: int = 2) -> Poly:
    """Parse ``"3/2*x^2*y - y + 1"``-style text into a canonical :class:`Poly`.

    Raises :class:`PolySyntaxError` (with ``.pos``) on malformed input or when
    ``u``/``v`` appear with ``nvars=2``.
    """
    if nvars not in (2, 4):
        raise PolyError(f"nvars must be 2 or 4, got {nvars}")
    return _Parser(text, nvars).parse()


def poly_add(a: Poly, b: Poly) -> Poly:
    if a.nvars != b.nvars:
        raise PolyError(f"mismatched nvars: {a.nvars} vs {b.nvars}")
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.nvars != b.nvars:
        raise PolyError(f"mismatched nvars: {a.nvars} vs {b.nvars}")
    return a * b


def product(polys: Iterable[Poly], nvars: int = 2) -> Poly:
    out = Poly.const(1, nvars)
    for p in polys:
        out = out * p
    return out


# linear-part criteria

class LinForm(NamedTuple):
    """Image of an element of m = (x, y) in m/m^2."""

    cx: Fraction
    cy: Fraction

    def is_zero(self) -> bool:
        return not self.cx and not self.cy


def linear_part(p: Poly) -> LinForm:
    if p.nvars != 2:
        raise PolyError("linear_part expects a polynomial in x, y")
    if p.constant_term():
        raise PolyError(f"{p} has nonzero constant term, so it is not in (x, y)")
    return LinForm(p.coeff((1, 0)), p.coeff((0, 1)))


def span_dim(l1: LinForm, l2: LinForm) -> int:
    """Dimension of the rational span of two linear forms."""
    if l1.cx * l2.cy - l1.cy * l2.cx:
        return 2
    if l1.is_zero() and l2.is_zero():
        return 0
    return 1


def is_in_m2(p: Poly) -> bool:
    return linear_part(p).is_zero()


def is_unit_multiple(p: Poly, q: Poly) -> bool:
    """True iff ``p == c*q`` for a nonzero rational ``c``.

    For power series this only detects associates differing by a constant;
    it never reports false positives.
    """
    if p.nvars != q.nvars:
        raise PolyError(f"mismatched nvars: {p.nvars} vs {q.nvars}")
    if p.is_zero() or q.is_zero():
        raise PolyError("is_unit_multiple needs nonzero polynomials")
    pt, qt = p._terms, q._terms
    if pt.keys() != qt.keys():
        return False
    exp0 = next(iter(pt))
    ratio = pt[exp0] / qt[exp0]
    return all(pt[e] == ratio * qt[e] for e in pt)


# 2x2 matrices over k[x, y, u, v]

class Mat2:
    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = tuple(tuple(r) for r in entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise PolyError("Mat2 needs a 2x2 array")
        fixed = []
        for r in rows:
            fixed_row = []
            for e in r:
                if isinstance(e, (int, Fraction)):
                    e = Poly.const(e, 4)
                elif e.nvars == 2:
                    e = e.lift(4)
                fixed_row.append(e)
            fixed.append(tuple(fixed_row))
        self.entries = tuple(fixed)

    @classmethod
    def identity(cls) -> "Mat2":
        return cls([[1, 0], [0, 1]])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other: "Mat2") -> "Mat2":
        a, b = self.entries, other.entries
        return Mat2(
            [[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)] for i in range(2)]
        )

    def __eq__(self, other):
        return isinstance(other, Mat2) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "Mat2([" + ", ".join("[" + ", ".join(str(e) for e in r) + "]" for r in self.entries) + "])"


def verify_mf(A: Mat2, B: Mat2, f: Poly) -> bool:
    """Check ``A @ B == B @ A == (f - uv) * I``."""
    f4 = f.lift(4) if f.nvars == 2 else f
    h = f4 - Poly.var("u", 4) * Poly.var("v", 4)
    target = Mat2([[h, 0], [0, h]])
    return A @ B == target and B @ A == target
