"""Text descriptions of rings, elements and ideals.

Ring grammar (whitespace is free between tokens):

    Expr  := Atom ( "*" Atom )*
    Atom  := "Z/" nat [ "[x]/(" poly ")" ]
           | "GF(" primepower ")"
           | "Zloc(" prime ")"
           | "EvBits"
    poly  := term ( "+" term )*          monic in x, coefficients 0..p-1
    term  := [ coeff ] "x" [ "^" exp ] | coeff

"*" is left associative and a chain of products denotes one flat product,
so printing a canonical ring and parsing the text round-trips.  GF(p^k)
expands to the quotient by the deterministic least irreducible monic
polynomial of degree k.

Element literals are presentation specific: integers for Z/n, polynomial
expressions for quotient rings, fractions a/b for the localized integers,
"(e1, e2)" tuples for products and "{1,3}:0" support:tail pairs for the
bits ring.
"""

from __future__ import annotations

import re

from .errors import NotPrime, NotPrimePower, ParseError
from .ideals import (
    BoolFiniteSupportIdeal,
    Ideal,
    LocalIdeal,
    ProductIdeal,
    ideal_from_generators,
)
from .rings import (
    Element,
    EventuallyConstantBitsRing,
    GaloisFieldRing,
    LocalizedIntegerRing,
    ModularRing,
    PolyQuotientRing,
    ProductRing,
    Ring,
    is_prime_int,
    product_ring,
    smallest_factor,
)

__all__ = [
    "parse_element",
    "parse_generators",
    "parse_ideal_label",
    "parse_ring",
]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def try_literal(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect_literal(self, literal: str):
        if not self.try_literal(literal):
            raise ParseError(f"missing {literal!r}", self.pos, (literal,))

    def read_nat(self) -> int:
        self.skip_ws()
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise ParseError("expected a number", self.pos, ("digit",))
        self.pos += m.end()
        return int(m.group())

    def read_until(self, closer: str) -> tuple[str, int]:
        """Consume text up to (not including) the closing literal."""
        start = self.pos
        idx = self.text.find(closer, self.pos)
        if idx < 0:
            raise ParseError(f"missing {closer!r}", len(self.text), (closer,))
        self.pos = idx + len(closer)
        return self.text[start:idx], start


def parse_ring(text: str) -> Ring:
    """Parse a ring expression; see the module docstring for the grammar."""
    sc = _Scanner(text)
    factors = [_parse_atom(sc)]
    while sc.try_literal("*"):
        factors.append(_parse_atom(sc))
    if not sc.eof():
        raise ParseError("trailing input", sc.pos, ("*", "end of input"))
    return product_ring(factors)


def _parse_atom(sc: _Scanner) -> Ring:
    sc.skip_ws()
    start = sc.pos
    if sc.try_literal("Z/"):
        n = sc.read_nat()
        if sc.try_literal("[x]/("):
            if not is_prime_int(n):
                raise NotPrime(n, smallest_factor(n))
            body, offset = sc.read_until(")")
            coeffs = _parse_poly(body, n, offset)
            if not coeffs or coeffs[-1] != 1 or len(coeffs) < 2:
                raise ParseError("the quotient polynomial must be monic of degree >= 1",
                                 offset)
            return PolyQuotientRing(n, coeffs)
        return ModularRing(n)
    if sc.try_literal("GF("):
        q = sc.read_nat()
        sc.expect_literal(")")
        p = smallest_factor(q)
        k = 0
        m = q
        while m > 1 and m % p == 0:
            m //= p
            k += 1
        if q < 2 or m != 1:
            raise NotPrimePower(f"{q} is not a prime power")
        return GaloisFieldRing(p, k)
    if sc.try_literal("Zloc("):
        p = sc.read_nat()
        sc.expect_literal(")")
        return LocalizedIntegerRing(p)
    if sc.try_literal("EvBits"):
        return EventuallyConstantBitsRing()
    raise ParseError("expected a ring atom", start,
                     ("Z/", "GF(", "Zloc(", "EvBits"))


_TERM_RE = re.compile(r"^(?:(\d+)\*?)?(x(?:\^(\d+))?)?$")


def _parse_poly(body: str, p: int, offset: int) -> tuple[int, ...]:
    coeffs: dict[int, int] = {}
    pos = offset
    for chunk in body.split("+"):
        term = chunk.strip()
        if not term:
            raise ParseError("empty polynomial term", pos)
        m = _TERM_RE.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ParseError(f"bad polynomial term {term!r}", pos,
                             ("coefficient", "x", "x^k"))
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            degree = 0
        elif m.group(3) is None:
            degree = 1
        else:
            degree = int(m.group(3))
        coeffs[degree] = (coeffs.get(degree, 0) + coeff) % p
        pos += len(chunk) + 1
    top = max(coeffs)
    out = [coeffs.get(i, 0) for i in range(top + 1)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


# ---------------------------------------------------------------------------
# element literals


def parse_element(ring: Ring, text: str) -> Element:
    """Parse one element literal in the syntax of the given presentation."""
    body = text.strip()
    if isinstance(ring, ModularRing):
        return ring.element(_parse_int(body))
    if isinstance(ring, PolyQuotientRing):
        if body == "0":
            return ring.zero
        return ring.element(_parse_poly(body, ring.p, 0))
    if isinstance(ring, LocalizedIntegerRing):
        from fractions import Fraction
        if "/" in body:
            num, _, den = body.partition("/")
            return ring.element(Fraction(_parse_int(num), _parse_int(den)))
        return ring.element(_parse_int(body))
    if isinstance(ring, ProductRing):
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError("a product element is a (…, …) tuple", 0, ("(",))
        parts = split_top_level(body[1:-1], ",")
        if len(parts) != len(ring.factors):
            raise ParseError(
                f"expected {len(ring.factors)} components, got {len(parts)}", 0)
        comps = [parse_element(f, part) for f, part in zip(ring.factors, parts)]
        return ring.element(tuple(c.value for c in comps))
    if isinstance(ring, EventuallyConstantBitsRing):
        m = re.match(r"^\{([\d,\s]*)\}\s*:\s*([01])$", body)
        if not m:
            raise ParseError("bits literal looks like {1,3}:0", 0, ("{",))
        inner = m.group(1).strip()
        positions = [int(s) for s in inner.split(",") if s.strip()] if inner else []
        return ring.element((frozenset(positions), int(m.group(2))))
    raise ParseError(f"no element syntax for {ring.describe()}", 0)


def _parse_int(text: str) -> int:
    body = text.strip()
    m = re.match(r"^-?\d+$", body)
    if not m:
        raise ParseError(f"expected an integer, got {body!r}", 0, ("integer",))
    return int(body)


def split_top_level(text: str, separator: str) -> list[str]:
    """Split on a separator, ignoring separators nested in (), {} or []."""
    parts, depth, current = [], 0, []
    for ch in text:
        if ch in "({[":
            depth += 1
        elif ch in ")}]":
            depth -= 1
        if ch == separator and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p for p in (s.strip() for s in parts) if p != ""]


def parse_generators(ring: Ring, text: str) -> list[Element]:
    """A comma separated list of element literals; empty text means none."""
    if not text.strip():
        return []
    return [parse_element(ring, part) for part in split_top_level(text, ",")]


def parse_ideal_label(ring: Ring, label: str) -> Ideal:
    """Reconstruct an ideal from its canonical label."""
    body = label.strip()
    if isinstance(ring, ProductRing) and not ring.is_finite:
        parts = body.split(" x ")
        if len(parts) != len(ring.factors):
            raise ParseError(
                f"expected {len(ring.factors)} ideal components", 0)
        comps = [parse_ideal_label(f, part) for f, part in zip(ring.factors, parts)]
        return ProductIdeal(ring, comps)
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError("an ideal label is parenthesized", 0, ("(",))
    inner = body[1:-1].strip()
    if isinstance(ring, EventuallyConstantBitsRing) and inner == "fin":
        return BoolFiniteSupportIdeal(ring)
    if isinstance(ring, LocalizedIntegerRing):
        m = re.match(rf"^{ring.p}\^(\d+)$", inner)
        if m:
            return LocalIdeal(ring, int(m.group(1)))
    gens = parse_generators(ring, inner)
    return ideal_from_generators(ring, gens)
