"""Monomial support, coefficient signs and signature pairs without expanding.

For a diagonal cyclic group the coefficient matrix of the invariant polynomial is
diagonal in the monomial basis, so the signature pair is a sign count over the
support ``{(r, s) : 0 < r + s <= p, p | r*q1 + s*q2}``.  Everything here runs in
time linear in ``p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import NotInSupport, ParameterError
from .params import Form, GroupParams, canonicalize


@dataclass(frozen=True)
class SupportEntry:
    r: int
    s: int
    l: int
    sign: int

    @property
    def degree(self) -> int:
        return self.r + self.s


@dataclass(frozen=True)
class SignaturePair:
    n_plus: int
    n_minus: int

    @property
    def n(self) -> int:
        return self.n_plus + self.n_minus

    @property
    def ratio(self) -> Fraction:
        if self.n == 0:
            raise ParameterError("empty support has no positivity ratio")
        return Fraction(self.n_plus, self.n)

    def __iter__(self):
        return iter((self.n_plus, self.n_minus))


def support_arrays(params: GroupParams):
    """Support as int64 arrays ``(r, s, l)`` sorted by ``(l, r)``.

    For each ``s`` the admissible ``r`` form one residue class modulo
    ``p / gcd(p, q1)``, so the whole set is generated with a single ``np.repeat``.
    """
    p, q1, q2 = params.p, params.q1, params.q2
    g = gcd(q1, p)
    m = p // g
    inv = pow(q1 // g, -1, m) if m > 1 else 0

    s = np.arange(p + 1, dtype=np.int64)
    c = (-s * q2) % p
    ok = c % g == 0
    r0 = ((c // g) * inv) % m
    room = p - s - r0
    ok &= room >= 0
    counts = np.where(ok, room // m + 1, 0)

    s_all = np.repeat(s, counts)
    r_start = np.repeat(r0, counts)
    # position of each entry inside its run
    run_first = np.repeat(np.cumsum(counts) - counts, counts)
    r_all = r_start + m * (np.arange(s_all.size, dtype=np.int64) - run_first)

    keep = (r_all + s_all) > 0
    r_all, s_all = r_all[keep], s_all[keep]
    l_all = (r_all * q1 + s_all * q2) // p
    order = np.lexsort((r_all, l_all))
    return r_all[order], s_all[order], l_all[order]


def sign_array(params: GroupParams, r, s, l):
    """Vectorised sign law; returns an int8 array of +1/-1."""
    g = np.gcd(np.gcd(r, s), l)
    if params.form is Form.DEFINITE:
        positive = (g % 2) == 1
    else:
        positive = ((s + g) % 2) == 1
    return np.where(positive, 1, -1).astype(np.int8)


def _sign(form: Form, r: int, s: int, l: int) -> int:
    g = gcd(r, s, l)
    if form is Form.DEFINITE:
        return 1 if g % 2 else -1
    return 1 if (s + g) % 2 else -1


def classify_sign(params: GroupParams, r: int, s: int) -> int:
    """Sign of the coefficient of ``x^r y^s``.

    Definite form: positive iff ``gcd(r, s, l)`` is odd.  Indefinite form (after
    ``y -> -y``): positive iff ``s + gcd(r, s, l)`` is odd.
    """
    if r < 0 or s < 0 or not 0 < r + s <= params.p:
        raise NotInSupport(f"(r, s) = ({r}, {s}) is outside 0 < r + s <= {params.p}")
    l = params.weight(r, s)
    if l is None:
        raise NotInSupport(f"{params.p} does not divide {r}*{params.q1} + {s}*{params.q2}")
    return _sign(params.form, r, s, l)


def step_gcd_sign(params: GroupParams, r: int, s: int) -> int:
    """The alternative predicate ``gcd(q1, q2, l)`` odd, kept for comparison reports.

    It does not describe the coefficients: with coprime steps it is always +1 in the definite form.
    """
    l = params.weight(r, s)
    if l is None:
        raise NotInSupport(f"({r}, {s}) not in support")
    g = gcd(params.q1, params.q2, l)
    sign = 1 if g % 2 else -1
    if params.form is Form.INDEFINITE and s % 2:
        sign = -sign
    return sign


def support(params: GroupParams) -> list[SupportEntry]:
    r, s, l = support_arrays(params)
    sg = sign_array(params, r, s, l)
    return [SupportEntry(int(a), int(b), int(c), int(d)) for a, b, c, d in zip(r, s, l, sg)]


def signature(params: GroupParams) -> SignaturePair:
    r, s, l = support_arrays(params)
    n_plus = int(np.count_nonzero(sign_array(params, r, s, l) > 0))
    return SignaturePair(n_plus, int(r.size) - n_plus)


def su11_signature(p: int) -> SignaturePair:
    """Closed form for the order ``p`` subgroup of SU(1,1)."""
    if p < 2:
        raise ParameterError(f"p must be >= 2, got {p}")
    if p % 2 == 0:
        return SignaturePair(2, p // 2)
    return SignaturePair(1, (p + 1) // 2)


def su11_params(p: int) -> GroupParams:
    return canonicalize(p, 1, p - 1, Form.INDEFINITE)


def positivity_ratio(params: GroupParams) -> Fraction:
    return signature(params).ratio
