"""Module expressions: ``"x^3 + x"``, ``"R^2 + p"``, ``"I1*2 + I3"``.

A sum of atoms with optional multiplicities written ``^k``, ``*k`` or
``k*``.  Cyclic atoms are ``x`` and ``x^a`` (``R`` is the free module
over a finite modulus); named atoms are ``R``, ``I<j>`` and, for n = 2,
``p``/``q``.  A cyclic atom takes its exponent first, so ``x^2^3`` is
three copies of ``x^2``.  ``0`` is the zero module.
"""

from __future__ import annotations

import re
from typing import Optional, Union

from .an import ANModule, ANRing
from .cyclic import CyclicModule
from .partitions import Partition

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[\^*+()]))")


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


def _tokens(text: str):
    pos, out = 0, []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mo = _TOKEN.match(text, pos)
        if not mo:
            raise ParseError("unexpected character", text, pos)
        kind = mo.lastgroup
        out.append((kind, mo.group(kind), mo.start(kind)))
        pos = mo.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, cyclic: bool):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0
        self.cyclic = cyclic

    def peek(self, value=None):
        kind, v, _ = self.toks[self.i]
        return v == value if value is not None else kind

    def take(self, kind=None, value=None):
        k, v, pos = self.toks[self.i]
        if (kind and k != kind) or (value is not None and v != value):
            want = value or kind
            raise ParseError(f"expected {want!r}, found {v or 'end of input'!r}", self.text, pos)
        self.i += 1
        return v, pos

    def number(self) -> int:
        v, pos = self.take("num")
        k = int(v)
        if k < 1:
            raise ParseError("multiplicity must be positive", self.text, pos)
        return k

    def parse(self) -> list[tuple[str, int, int, int]]:
        """List of (atom, exponent, multiplicity, position)."""
        if self.peek() == "num" and self.toks[self.i][1] == "0" and self.toks[self.i + 1][0] == "end":
            return []
        terms = [self.term()]
        while self.peek("+"):
            self.take(value="+")
            terms.append(self.term())
        if self.peek() != "end":
            _, v, pos = self.toks[self.i]
            raise ParseError(f"unexpected {v!r}", self.text, pos)
        return terms

    def term(self):
        mult = 1
        if self.peek() == "num":
            mult = self.number()
            self.take(value="*")
        if self.peek("("):
            self.take(value="(")
            atom, exp, pos = self.atom()
            self.take(value=")")
        else:
            atom, exp, pos = self.atom()
        while self.peek("^") or self.peek("*"):
            self.take()
            mult *= self.number()
        return atom, exp, mult, pos

    def atom(self):
        name, pos = self.take("name")
        exp = 1
        if name == "x" and self.cyclic and self.peek("^"):
            self.take(value="^")
            v, epos = self.take("num")
            exp = int(v)
            if exp < 1:
                raise ParseError("exponent must be positive", self.text, epos)
        return name, exp, pos


def parse_module(
    text: str,
    modulus: Optional[int] = None,
    an: Optional[ANRing] = None,
) -> Union[CyclicModule, ANModule]:
    """Parse into a :class:`CyclicModule` (default) or, given ``an``, an :class:`ANModule`."""
    if an is not None:
        return _parse_an(text, an)
    parts = []
    for atom, exp, mult, pos in _Parser(text, cyclic=True).parse():
        if atom == "R":
            if modulus is None:
                raise ParseError("R is not of finite length over k[[x]]", text, pos)
            exp = modulus
        elif atom != "x":
            raise ParseError(f"unknown atom {atom!r}", text, pos)
        if modulus is not None and exp > modulus:
            raise ParseError(f"part {exp} exceeds modulus {modulus}", text, pos)
        parts += [exp] * mult
    return CyclicModule(Partition(parts), modulus)


def _parse_an(text: str, ring: ANRing) -> ANModule:
    alias = {"R": 0, "F": 0}
    if ring.n == 2:
        alias.update(p=1, q=2)
    mult = [0] * (ring.n + 1)
    for atom, _, k, pos in _Parser(text, cyclic=False).parse():
        if atom in alias:
            j = alias[atom]
        elif re.fullmatch(r"I\d+", atom):
            j = int(atom[1:])
            if not 1 <= j <= ring.n:
                raise ParseError(f"index exceeds n = {ring.n}", text, pos)
        else:
            raise ParseError(f"unknown atom {atom!r}", text, pos)
        mult[j] += k
    return ANModule(ring, tuple(mult))


def format_module(M: Union[CyclicModule, ANModule]) -> str:
    """Canonical text; ``parse_module(format_module(M))`` gives back ``M``."""
    if isinstance(M, ANModule):
        return M.label()
    counts: dict[int, int] = {}
    for a in M.parts:
        counts[a] = counts.get(a, 0) + 1
    terms = []
    for a in sorted(counts, reverse=True):
        atom = "x" if a == 1 else f"x^{a}"
        terms.append(atom if counts[a] == 1 else f"{atom}*{counts[a]}")
    return " + ".join(terms) or "0"


def parse_partition(text: str) -> Partition:
    """``"3,1,1"``, ``"[3, 1, 1]"`` or ``"3 1 1"``."""
    body = text.strip().strip("[]()")
    if not body:
        return Partition()
    try:
        return Partition(int(t) for t in re.split(r"[,\s]+", body) if t)
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
