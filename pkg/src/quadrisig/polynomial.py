"""Sparse bivariate polynomials with exact integer coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class SparsePolynomial:
    """Map ``(r, s) -> c`` for the monomial ``c * x**r * y**s``; zeros are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], int] = {}
        for (r, s), c in items:
            if r < 0 or s < 0:
                raise ValueError(f"negative exponent in {(r, s)}")
            key = (int(r), int(s))
            acc[key] = acc.get(key, 0) + int(c)
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def parse(cls, text: str) -> "SparsePolynomial":
        """Parse strings such as ``'2x^3 - x^6 + 3y^2 + 6x^3y^2'``."""
        import re

        src = text.replace(" ", "").replace("**", "^").replace("*", "")
        if not src:
            return cls()
        if src[0] not in "+-":
            src = "+" + src
        terms: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", src):
            m = re.fullmatch(r"(\d*)(x(?:\^(\d+))?)?(y(?:\^(\d+))?)?", body)
            if not m or not body:
                raise ValueError(f"cannot parse term {sign}{body!r}")
            coef = int(m.group(1)) if m.group(1) else 1
            r = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
            s = (int(m.group(5)) if m.group(5) else 1) if m.group(4) else 0
            terms[(r, s)] = terms.get((r, s), 0) + (coef if sign == "+" else -coef)
        return cls(terms)

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) - c
        return SparsePolynomial(out)

    def __neg__(self):
        return SparsePolynomial({k: -c for k, c in self.terms.items()})

    def flip_y(self) -> "SparsePolynomial":
        """Substitute ``y -> -y``."""
        return SparsePolynomial({(r, s): -c if s % 2 else c for (r, s), c in self.terms.items()})

    def swap_xy(self) -> "SparsePolynomial":
        return SparsePolynomial({(s, r): c for (r, s), c in self.terms.items()})

    def degree(self) -> int:
        return max((r + s for r, s in self.terms), default=-1)

    def evaluate(self, x, y):
        return evaluate(self, x, y)

    def __repr__(self):
        return f"SparsePolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (r, s), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
            mono = ""
            if r:
                mono += "x" if r == 1 else f"x^{r}"
            if s:
                mono += "y" if s == 1 else f"y^{s}"
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def evaluate(poly: SparsePolynomial, x, y):
    """Exact value of ``sum c * x**r * y**s``; ints and Fractions stay exact."""
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        x, y = Fraction(x), Fraction(y)
    total = 0
    for (r, s), c in poly.terms.items():
        total += c * x**r * y**s
    return total
