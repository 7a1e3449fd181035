"""Exact expansion of the invariant polynomial and the induced CR map.

The product ``prod_j (1 - w^(q1 j) x - w^(q2 j) y)`` is formed in the ring of
bivariate integer polynomials with a formal root of unity ``t`` subject to
``t^p = 1``.  One reduction modulo the p-th cyclotomic polynomial at the end
turns the result into an honest integer polynomial.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import InsufficientPrimes, NonConstantResidue
from .params import Form, GroupParams
from .polynomial import SparsePolynomial


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial.

    Obtained by dividing ``t^n - 1`` exactly by the cyclotomic polynomials of the
    proper divisors of ``n``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _exact_div(num: list[int], den: list[int]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for k, dk in enumerate(den):
                num[i - dd + k] -= c * dk
    if any(num[:dd]):
        raise ArithmeticError("division left a remainder")
    return quot


# every contribution to one (t^e, x^r, y^s) slot carries the sign (-1)^(r+s), so
# entries are bounded by 3^p; int64 is exact while 3^p < 2^63
INT64_MAX_P = 39


class CyclotomicElement:
    """``sum_j c_j(x, y) t^j`` with ``t^p = 1``.

    Stored densely as ``data[j, r, s]``: int64 for ``p <= 39``, Python ints above.
    ``degree`` tracks the largest ``r + s`` that can be nonzero.
    """

    __slots__ = ("p", "data", "degree")

    def __init__(self, p: int, data: np.ndarray, degree: int):
        self.p = p
        self.data = data
        self.degree = degree

    @classmethod
    def one(cls, p: int) -> "CyclotomicElement":
        dtype = np.int64 if p <= INT64_MAX_P else object
        data = np.zeros((p, p + 1, p + 1), dtype=dtype)
        data[0, 0, 0] = 1
        return cls(p, data, 0)

    def times_linear(self, a: int, b: int) -> "CyclotomicElement":
        """Multiply by ``1 - t^a x - t^b y``."""
        k = self.degree
        if k >= self.p:
            raise ValueError("degree would exceed the allocated p")
        old = self.data[:, : k + 1, : k + 1]
        new = self.data.copy()
        new[:, 1 : k + 2, : k + 1] -= np.roll(old, a, axis=0)
        new[:, : k + 1, 1 : k + 2] -= np.roll(old, b, axis=0)
        return CyclotomicElement(self.p, new, k + 1)

    def reduce(self) -> SparsePolynomial:
        """Integer image after reduction modulo the p-th cyclotomic polynomial.

        Raises NonConstantResidue if any monomial keeps a t-dependent remainder.
        """
        p = self.p
        phi = np.array(cyclotomic_polynomial(p), dtype=object)
        deg = len(phi) - 1
        n = self.data.shape[1]
        vec = self.data.reshape(p, -1).astype(object)
        for i in range(p - 1, deg - 1, -1):
            top = vec[i].copy()
            if not top.any():
                continue
            vec[i - deg : i + 1] -= np.outer(phi, top)
        if deg > 1 and vec[1:deg].any():
            j = int(np.flatnonzero(vec[1:deg].any(axis=0))[0])
            raise NonConstantResidue(f"non-constant residue at monomial {divmod(j, n)}")
        const = vec[0]
        return SparsePolynomial({divmod(int(j), n): int(const[j]) for j in np.flatnonzero(const)})


def expand(params: GroupParams) -> SparsePolynomial:
    """Exact coefficients of ``1 - prod_j (1 - w^(q1 j) x -/+ w^(q2 j) y)``.

    The indefinite form is the definite expansion followed by ``y -> -y``.
    """
    p, q1, q2 = params.p, params.q1, params.q2
    el = CyclotomicElement.one(p)
    for j in range(p):
        el = el.times_linear(q1 * j % p, q2 * j % p)
    prod = el.reduce()
    if prod[(0, 0)] != 1:
        raise NonConstantResidue(f"product has constant term {prod[(0, 0)]}, expected 1")
    phi = SparsePolynomial({k: -c for k, c in prod.terms.items() if k != (0, 0)})
    if phi.degree() > p:
        raise ArithmeticError(f"term of degree {phi.degree()} > p = {p}")
    return phi if params.definite else phi.flip_y()


# ---------------------------------------------------------------- modular backend

PRIME_CEILING = 2**31


@lru_cache(maxsize=None)
def _prime_pool(p: int, size: int) -> tuple[tuple[int, int], ...]:
    """``size`` pairs (prime l, element of order p mod l), l = 1 mod p, l < 2^31, descending."""
    factors = list(factorint(p)) if p > 1 else []
    pool = []
    k = (PRIME_CEILING - 2) // p
    while len(pool) < size and k > 0:
        ell = k * p + 1
        k -= 1
        if not isprime(ell):
            continue
        for base in range(2, ell):
            g = pow(base, (ell - 1) // p, ell)
            if all(pow(g, p // f, ell) != 1 for f in factors):
                pool.append((ell, g))
                break
    return tuple(pool)


def coefficient_bound(p: int) -> int:
    """Largest ``C(p, r) * C(p - r, s)`` over ``r + s <= p``; bounds every |coefficient|."""
    return max(math.comb(p, r) * math.comb(p - r, s) for r in range(p + 1) for s in range(p - r + 1))


def _product_mod(p: int, q1: int, q2: int, ell: int, g: int) -> np.ndarray:
    a_pow = [pow(g, e, ell) for e in range(p)]
    acc = np.zeros((p + 1, p + 1), dtype=np.int64)
    acc[0, 0] = 1
    for j in range(p):
        a, b = a_pow[q1 * j % p], a_pow[q2 * j % p]
        nxt = acc.copy()
        nxt[1:, :] -= (acc[:-1, :] * a) % ell
        nxt[:, 1:] -= (acc[:, :-1] * b) % ell
        acc = nxt % ell
    return acc


def expand_modular(params: GroupParams, pool_size: int = 32) -> SparsePolynomial:
    """Same result as :func:`expand`, via word-size primes and Chinese remaindering."""
    p, q1, q2 = params.p, params.q1, params.q2
    need = 2 * coefficient_bound(p)
    pool = _prime_pool(p, pool_size)
    used, modulus = [], 1
    for ell, g in pool:
        if modulus > need:
            break
        used.append((ell, g))
        modulus *= ell
    if modulus <= need:
        raise InsufficientPrimes(
            f"insufficient primes: {len(pool)} primes = 1 mod {p} give modulus below 2*bound"
        )

    residues = [_product_mod(p, q1, q2, ell, g) for ell, g in used]
    deg = np.add.outer(np.arange(p + 1), np.arange(p + 1))
    idx = np.argwhere(deg <= p)

    values = [int(x) for x in residues[0][idx[:, 0], idx[:, 1]]]
    m = used[0][0]
    for (ell, _), res in zip(used[1:], residues[1:]):
        inv = pow(m % ell, -1, ell)
        col = res[idx[:, 0], idx[:, 1]]
        values = [v + m * (((int(c) - v) * inv) % ell) for v, c in zip(values, col)]
        m *= ell

    terms = {}
    for (r, s), v in zip(idx.tolist(), values):
        if v > m // 2:
            v -= m
        if (r, s) != (0, 0) and v:
            terms[(r, s)] = -v
    phi = SparsePolynomial(terms)
    return phi if params.definite else phi.flip_y()


# ---------------------------------------------------------------- CR map


@dataclass(frozen=True)
class CRMap:
    """Components ``sqrt(|C_rs|) z1^r z2^s`` split by coefficient sign."""

    f_terms: list = field(default_factory=list)  # (magnitude, r, s)
    g_terms: list = field(default_factory=list)

    @property
    def signature(self) -> tuple[int, int]:
        return len(self.f_terms), len(self.g_terms)

    def components(self, z1, z2):
        """Values of F and G at ``(z1, z2)`` as two complex arrays."""
        z1, z2 = complex(z1), complex(z2)
        f = np.array([m * z1**r * z2**s for m, r, s in self.f_terms], dtype=complex)
        g = np.array([m * z1**r * z2**s for m, r, s in self.g_terms], dtype=complex)
        return f, g

    def hermitian_value(self, z1, z2) -> float:
        """``||F(z)||^2 - ||G(z)||^2``."""
        f, g = self.components(z1, z2)
        return float(np.sum(np.abs(f) ** 2) - np.sum(np.abs(g) ** 2))


def _sort_key(params: GroupParams):
    return lambda rs: ((rs[0] * params.q1 + rs[1] * params.q2) // params.p, rs[0])


def cr_map(params: GroupParams, poly: SparsePolynomial | None = None) -> CRMap:
    poly = expand(params) if poly is None else poly
    f, g = [], []
    for key in sorted(poly.terms, key=_sort_key(params)):
        c = poly.terms[key]
        (f if c > 0 else g).append((math.sqrt(abs(c)), key[0], key[1]))
    return CRMap(f, g)
