"""Sparse multivariate polynomials over the Gaussian rationals Q(i).

Exponents may be negative, which is how a variable declared invertible
(the ``t`` of a localization V[1/t]) is handled: dividing by a unit
monomial is then an ordinary operation.

Polynomials print and parse as strings such as ``"x + t*y"``,
``"-t^2"`` or ``"(0+1i)*z"``; ``i`` is the imaginary unit only when it
follows a number (``1i``), otherwise it is a variable name.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Monomial = tuple  # sorted tuple of (variable, nonzero exponent)


@dataclass(frozen=True)
class GaussRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, v) -> "GaussRational":
        if isinstance(v, GaussRational):
            return v
        if isinstance(v, complex):
            return cls(Fraction(v.real), Fraction(v.imag))
        return cls(Fraction(v), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, o):
        if not isinstance(o, _NUMBERS):
            return NotImplemented
        o = GaussRational.coerce(o)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, o):
        if not isinstance(o, _NUMBERS):
            return NotImplemented
        return self + (-GaussRational.coerce(o))

    def __rsub__(self, o):
        return GaussRational.coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, _NUMBERS):
            return NotImplemented
        o = GaussRational.coerce(o)
        return GaussRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, o):
        return self * GaussRational.coerce(o).inverse()

    def __eq__(self, o):
        try:
            o = GaussRational.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"

    __repr__ = __str__


_NUMBERS = (int, Fraction, complex, GaussRational)

I = GaussRational(0, 1)
ONE = GaussRational(1)
ZERO = GaussRational(0)

Scalar = Union[int, Fraction, GaussRational]


def _mono(pairs: Iterable[tuple[str, int]]) -> Monomial:
    acc: dict[str, int] = {}
    for v, e in pairs:
        acc[v] = acc.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in acc.items() if e))


class Poly:
    """Immutable polynomial: a map from monomials to nonzero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = GaussRational.coerce(c)
            if c:
                clean[_mono(m)] = clean.get(_mono(m), ZERO) + c
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, v) -> "Poly":
        if isinstance(v, Poly):
            return v
        if isinstance(v, str):
            return parse_poly(v)
        return cls.const(v)

    @property
    def terms(self) -> dict[Monomial, GaussRational]:
        return dict(self._terms)

    def variables(self) -> set[str]:
        return {v for m in self._terms for v, _ in m}

    def is_zero(self) -> bool:
        return not self._terms

    def constant(self) -> GaussRational | None:
        """The value if this is a constant polynomial, else ``None``."""
        if not self._terms:
            return ZERO
        if list(self._terms) == [()]:
            return self._terms[()]
        return None

    # arithmetic
    def __add__(self, o) -> "Poly":
        o = Poly.coerce(o)
        t = dict(self._terms)
        for m, c in o._terms.items():
            t[m] = t.get(m, ZERO) + c
        return Poly(t)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self._terms.items()})

    def __sub__(self, o) -> "Poly":
        return self + (-Poly.coerce(o))

    def __rsub__(self, o) -> "Poly":
        return Poly.coerce(o) - self

    def __mul__(self, o) -> "Poly":
        o = Poly.coerce(o)
        t: dict[Monomial, GaussRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in o._terms.items():
                m = _mono(m1 + m2)
                t[m] = t.get(m, ZERO) + c1 * c2
        return Poly(t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            (m, c), = self._single_term()
            return Poly({tuple((v, -e) for v, e in m): c.inverse()}) ** (-k)
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _single_term(self):
        if len(self._terms) != 1:
            raise ValueError(f"{self} is not a single term")
        return list(self._terms.items())

    def is_unit(self, units: Iterable[str] = ()) -> bool:
        """Nonzero constant times a monomial in the invertible variables."""
        if len(self._terms) != 1:
            return False
        (m,) = self._terms
        units = set(units)
        return all(v in units for v, _ in m)

    def inverse(self) -> "Poly":
        (m, c), = self._single_term()
        return Poly({tuple((v, -e) for v, e in m): c.inverse()})

    def subs(self, var: str, value) -> "Poly":
        """Substitute ``value`` (scalar or polynomial) for ``var``."""
        value = Poly.coerce(value)
        out = Poly()
        for m, c in self._terms.items():
            rest = tuple((v, e) for v, e in m if v != var)
            e = dict(m).get(var, 0)
            term = Poly({rest: c})
            out = out + (term * value ** e if e else term)
        return out

    def __eq__(self, o) -> bool:
        if isinstance(o, (int, Fraction, GaussRational, str)):
            o = Poly.coerce(o)
        if not isinstance(o, Poly):
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda m: (-sum(e for _, e in m), m))
        out = ""
        for m, c in ((m, self._terms[m]) for m in keys):
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if not c.im and c.re < 0:
                sign, c = "-", -c
            else:
                sign = "+"
            if not mono:
                body = str(c)
            elif c == ONE:
                body = mono
            else:
                body = f"{c}*{mono}"
            out += (("-" if sign == "-" else "") + body) if not out else f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly('{self}')"


# parsing

_IMAG = re.compile(r"(?<![A-Za-z_0-9])(\d+)i\b")


def parse_poly(text: str) -> Poly:
    """Parse ``"x^2 + (0+1i)*y - 3/2*t"`` and similar into a :class:`Poly`."""
    src = _IMAG.sub(r"\1j", text.replace("^", "**"))
    try:
        tree = ast.parse(src.strip() or "0", mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc.msg}") from None
    return _eval(tree.body, text)


def _eval(node, text) -> Poly:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, complex)) \
            and not isinstance(node.value, bool):
        if isinstance(node.value, complex):
            return Poly.const(GaussRational(Fraction(0), Fraction(int(node.value.imag))))
        return Poly.const(node.value)
    if isinstance(node, ast.Name):
        return Poly.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        a = _eval(node.left, text)
        if isinstance(node.op, ast.Pow):
            e = _eval(node.right, text).constant()
            if e is None or e.im or e.re.denominator != 1:
                raise ValueError(f"non-integer exponent in {text!r}")
            return a ** int(e.re)
        b = _eval(node.right, text)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            if not b.is_unit():
                raise ValueError(f"division by a non-constant in {text!r}")
            return a * b.inverse()
    raise ValueError(f"unsupported syntax in polynomial {text!r}")


def poly_matrix(rows) -> list[list[Poly]]:
    """Coerce nested lists of strings/numbers/polys into a Poly matrix."""
    return [[Poly.coerce(e) for e in row] for row in rows]
