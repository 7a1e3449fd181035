"""Group parameters (p; q1, q2) for the cyclic group generated by diag(w^q1, w^q2)."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import ParameterError


class Form(enum.Enum):
    """Hermitian form on C^2 that the group preserves."""

    DEFINITE = "u2"  # <z,w> = z1 w1* + z2 w2*, source is the sphere
    INDEFINITE = "u11"  # <z,w> = z1 w1* - z2 w2*, source is Q(1,1)

    @classmethod
    def parse(cls, value) -> "Form":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("(", "").replace(")", "").replace(",", "")
        aliases = {
            "u2": cls.DEFINITE, "definite": cls.DEFINITE, "sphere": cls.DEFINITE,
            "u11": cls.INDEFINITE, "indefinite": cls.INDEFINITE,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ParameterError(f"unknown form {value!r}; expected 'u2' or 'u11'") from None


@dataclass(frozen=True, order=True)
class GroupParams:
    """Order ``p`` cyclic group with exponents ``q1``, ``q2`` and a choice of form.

    Both exponents live in ``[0, p)`` and ``gcd(p, q1, q2) == 1`` (otherwise the
    generator has order smaller than ``p``).  ``q1 <= q2`` is not enforced: for the
    indefinite form the coordinate swap is not a symmetry, so canonical indefinite
    parameters may have ``q1 > q2``.
    """

    p: int
    q1: int
    q2: int
    form: Form = Form.DEFINITE

    def __post_init__(self):
        for name in ("p", "q1", "q2"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        object.__setattr__(self, "form", Form.parse(self.form))
        if self.p < 1:
            raise ParameterError(f"p must be >= 1, got {self.p}")
        if not (0 <= self.q1 < self.p and 0 <= self.q2 < self.p) and self.p > 1:
            raise ParameterError(f"q1, q2 must lie in [0, {self.p}), got ({self.q1}, {self.q2})")
        if self.p == 1 and (self.q1, self.q2) != (0, 0):
            raise ParameterError("p = 1 forces q1 = q2 = 0")
        if gcd(self.p, self.q1, self.q2) != 1:
            raise ParameterError(
                f"gcd({self.p}, {self.q1}, {self.q2}) != 1: not a faithful order-p parameterization"
            )

    @property
    def definite(self) -> bool:
        return self.form is Form.DEFINITE

    def weight(self, r: int, s: int) -> int | None:
        """Weight ``(r*q1 + s*q2) / p``, or None when p does not divide the numerator."""
        num = r * self.q1 + s * self.q2
        return num // self.p if num % self.p == 0 else None

    def with_form(self, form) -> "GroupParams":
        return GroupParams(self.p, self.q1, self.q2, Form.parse(form))

    def __str__(self):
        return f"({self.p};{self.q1},{self.q2};{self.form.value})"


def make_params(p: int, q1: int, q2: int, form=Form.DEFINITE) -> GroupParams:
    return GroupParams(p, q1, q2, Form.parse(form))


def canonicalize(p: int, q1: int, q2: int, form=Form.DEFINITE) -> GroupParams:
    """Lexicographically smallest ``(q1, q2)`` generating the same subgroup.

    Candidates are ``(k*q1 % p, k*q2 % p)`` for units ``k`` mod ``p``.  For the
    definite form the swapped pair is admitted too, since exchanging coordinates
    preserves the U(2) form but negates the U(1,1) one.

    >>> canonicalize(7, 2, 4)
    GroupParams(p=7, q1=1, q2=2, form=<Form.DEFINITE: 'u2'>)
    """
    form = Form.parse(form)
    base = GroupParams(p, q1 % p if p > 1 else 0, q2 % p if p > 1 else 0, form)
    if p == 1:
        return base
    best = None
    for k in range(1, p):
        if gcd(k, p) != 1:
            continue
        a, b = k * base.q1 % p, k * base.q2 % p
        cands = [(a, b), (b, a)] if form is Form.DEFINITE else [(a, b)]
        for c in cands:
            if best is None or c < best:
                best = c
    return GroupParams(p, best[0], best[1], form)


def valid_pairs(p: int, *, ordered: bool = True, min_q1: int = 0, strict: bool = False):
    """Yield every ``(q1, q2)`` in ``[0, p)^2`` with ``gcd(p, q1, q2) == 1``.

    ``ordered`` keeps only ``q1 <= q2`` (``q1 < q2`` with ``strict``).
    """
    for q1 in range(min_q1, max(p, 1)):
        for q2 in range(max(p, 1)):
            if ordered and (q2 < q1 or (strict and q2 == q1)):
                continue
            if gcd(p, q1, q2) == 1:
                yield q1, q2
