"""Text format for permutation groups.

Grammar (whitespace and newlines are free, points are 1-based)::

    spec    := gens | regular | cyclic | trivial | dsum | par | subdir
    gens    := "gens:" perm ("," perm)* [";" "degree:" INT]
    regular := "regular:" "[" INT ("," INT)* "]"
    cyclic  := "cyclic:" INT
    trivial := "trivial:" INT
    dsum    := "dsum(" spec ("," spec)+ ")"
    par     := "par(" spec "," INT ")"
    subdir  := "subdir(" spec "," spec "," spec "," spec "," "phi:" perm "->" perm ("," perm "->" perm)* ")"
    perm    := "()" | cycle+          cycle := "(" INT ([","] INT)* ")"

``subdir(G1, H1, G2, H2, phi: ...)`` gives phi on generators of G1 modulo H1
by images in G2. Without ``degree:`` a generator list acts on its largest
mentioned point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DomainError, ParseError
from .perm import (
    FactorIso,
    PermGroup,
    Permutation,
    _coset_key,
    direct_sum,
    format_cycles,
    parallel_sum,
    parse_cycles,
    regular_group,
    subdirect_sum,
    trivial_group,
)

_KEYWORDS = ("gens", "regular", "cyclic", "trivial", "dsum", "par", "subdir", "degree", "phi")


@dataclass
class _Perm:
    text: str
    offset: int


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    # ------------------------------------------------------------ low level
    def where(self, pos: int | None = None) -> tuple[int, int]:
        pos = self.pos if pos is None else pos
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def fail(self, message: str, pos: int | None = None):
        raise ParseError(message, *self.where(pos))

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            found = self.text[self.pos : self.pos + 10] or "end of input"
            self.fail(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if m is None:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group(0))

    def word(self) -> str:
        self.skip()
        m = re.compile(r"[a-z]+").match(self.text, self.pos)
        if m is None or m.group(0) not in _KEYWORDS:
            self.fail("expected one of gens:, regular:, cyclic:, trivial:, dsum(, par(, subdir(")
        self.pos = m.end()
        return m.group(0)

    def perm(self) -> _Perm:
        """Raw cycle text; parsed once the degree is known."""
        self.skip()
        start = self.pos
        if not self.peek("("):
            self.fail("expected a permutation in cycle notation")
        while self.peek("("):
            end = self.text.find(")", self.pos)
            if end < 0:
                self.fail("unterminated cycle: missing ')'")
            self.pos = end + 1
        return _Perm(self.text[start : self.pos], start)

    def realize(self, p: _Perm, degree: int) -> Permutation:
        try:
            return parse_cycles(p.text, degree)
        except ParseError as exc:
            col = (exc.column or 1) - 1
            raise ParseError(exc.reason, *self.where(p.offset + col)) from None

    # ------------------------------------------------------------ grammar
    def spec(self) -> PermGroup:
        start = self.pos
        kw = self.word()
        if kw == "gens":
            self.expect(":")
            raws = [self.perm()]
            while self.peek(",") and not self._next_is_spec_separator():
                self.expect(",")
                raws.append(self.perm())
            degree = None
            if self.peek(";"):
                self.expect(";")
                if self.word() != "degree":
                    self.fail("expected 'degree:'")
                self.expect(":")
                degree = self.integer()
            if degree is None:
                points = [int(x) for r in raws for x in re.findall(r"\d+", r.text)]
                degree = max(points, default=0)
            return PermGroup(degree, [self.realize(r, degree) for r in raws])
        if kw == "regular":
            self.expect(":")
            self.expect("[")
            orders = [self.integer()]
            while self.peek(","):
                self.expect(",")
                orders.append(self.integer())
            self.expect("]")
            if any(k < 1 for k in orders):
                self.fail("regular orders must be positive", start)
            return regular_group(orders)
        if kw == "cyclic":
            self.expect(":")
            n = self.integer()
            if n < 1:
                self.fail("cyclic order must be positive", start)
            return regular_group([n])
        if kw == "trivial":
            self.expect(":")
            return trivial_group(self.integer())
        if kw == "dsum":
            self.expect("(")
            parts = [self.spec()]
            while self.peek(","):
                self.expect(",")
                parts.append(self.spec())
            self.expect(")")
            G = parts[0]
            for H in parts[1:]:
                G = direct_sum(G, H)
            return G
        if kw == "par":
            self.expect("(")
            G = self.spec()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            if k < 1:
                self.fail("parallel copies must be positive", start)
            return parallel_sum(G, k)
        if kw == "subdir":
            return self._subdir(start)
        self.fail(f"{kw!r} cannot start a group spec", start)

    def _next_is_spec_separator(self) -> bool:
        """After a comma: is the next token a keyword (so the comma ends the list)?"""
        save = self.pos
        self.pos += 1
        self.skip()
        is_kw = bool(re.compile(r"[a-z]").match(self.text, self.pos))
        self.pos = save
        return is_kw

    def _subdir(self, start: int) -> PermGroup:
        self.expect("(")
        G1 = self.spec()
        self.expect(",")
        H1 = self.spec()
        self.expect(",")
        G2 = self.spec()
        self.expect(",")
        H2 = self.spec()
        self.expect(",")
        if self.word() != "phi":
            self.fail("expected 'phi:'")
        self.expect(":")
        pairs = []
        while True:
            a = self.perm()
            self.expect("->")
            b = self.perm()
            pairs.append((self.realize(a, G1.degree), self.realize(b, G2.degree)))
            if not self.peek(","):
                break
            self.expect(",")
        self.expect(")")
        if H1.degree != G1.degree or H2.degree != G2.degree:
            self.fail("kernel degree differs from its group", start)
        try:
            iso = factor_iso_from_images(G1, H1, G2, H2, pairs)
            return subdirect_sum(G1, H1, G2, H2, iso)
        except DomainError as exc:
            self.fail(str(exc), start)


def factor_iso_from_images(G1, H1, G2, H2, pairs) -> FactorIso:
    """Extend phi(a H1) = b H2 over the words in the given pairs."""
    for a, b in pairs:
        if a not in G1 or b not in G2:
            raise DomainError(f"phi pair {format_cycles(a)} -> {format_cycles(b)} leaves the groups")
    left = [Permutation.identity(G1.degree)]
    right = [Permutation.identity(G2.degree)]
    seen = {_coset_key(tuple(left[0]), H1): 0}
    images = {_coset_key(tuple(right[0]), H2)}
    i = 0
    while i < len(left):
        for a, b in pairs:
            x, y = a * left[i], b * right[i]
            key = _coset_key(tuple(x), H1)
            if key in seen:
                j = seen[key]
                if _coset_key(tuple(y), H2) != _coset_key(tuple(right[j]), H2):
                    raise DomainError("phi is not well defined on cosets")
                continue
            image = _coset_key(tuple(y), H2)
            if image in images:
                raise DomainError("phi is not injective on cosets")
            images.add(image)
            seen[key] = len(left)
            left.append(x)
            right.append(y)
        i += 1
    iso = FactorIso(tuple(left), tuple(right), tuple(range(len(left))))
    iso.validate(G1, H1, G2, H2)
    return iso


def parse_group(text: str) -> PermGroup:
    p = _Parser(text)
    G = p.spec()
    p.skip()
    if p.pos != len(text):
        p.fail("unexpected trailing text")
    return G


def format_group(G: PermGroup) -> str:
    """A spec string that parses back to G."""
    gens = ", ".join(format_cycles(g) for g in G.generators) or "()"
    return f"gens: {gens}; degree: {G.degree}"
