"""Circulant determinant as a sum over stepped permutations.

Points are labelled ``1..p``.  A permutation is *stepped* when every
``sigma(j) - j`` is congruent to 0, q1 or q2 mod p; the class ``T(r, s)`` holds
those with r q1-steps and s q2-steps.  Only these permutations contribute to the
determinant of the three-line circulant, so brute-force enumeration gives an
expansion that is independent of root-of-unity arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import gcd

from .errors import LemmaViolation, ParameterError, SizeGuardError
from .params import GroupParams
from .polynomial import SparsePolynomial

FIXED, STEP1, STEP2 = 0, 1, 2
DEFAULT_MAX_P = 14


def _require_oracle_params(params: GroupParams):
    if not 1 <= params.q1 < params.q2 < params.p:
        raise ParameterError(
            f"stepped permutations need 1 <= q1 < q2 < p, got {params}; "
            "q1 = 0 or q1 = q2 makes step labels collide"
        )


@dataclass(frozen=True)
class CirculantSpec:
    p: int
    q1: int
    q2: int
    entries: tuple  # first row d_1..d_p as "1", "-x", "-y", "0"

    def row(self, i: int) -> tuple:
        """Row ``i`` (1-based): the first row rotated right by ``i - 1``."""
        k = (i - 1) % self.p
        return self.entries[-k:] + self.entries[:-k] if k else self.entries

    def matrix(self) -> list[tuple]:
        return [self.row(i) for i in range(1, self.p + 1)]


def circulant_spec(params: GroupParams) -> CirculantSpec:
    _require_oracle_params(params)
    entries = ["0"] * params.p
    entries[0] = "1"
    entries[params.q1] = "-x"
    entries[params.q2] = "-y"
    return CirculantSpec(params.p, params.q1, params.q2, tuple(entries))


@dataclass(frozen=True)
class SteppedPermutation:
    """``images[j - 1] == sigma(j)``; ``labels[j - 1]`` is FIXED, STEP1 or STEP2."""

    p: int
    q1: int
    q2: int
    images: tuple
    labels: tuple

    @classmethod
    def from_images(cls, params: GroupParams, images) -> "SteppedPermutation":
        p = params.p
        images = tuple(int(v) for v in images)
        if len(images) != p or sorted(images) != list(range(1, p + 1)):
            raise ParameterError(f"{images} is not a permutation of [1..{p}]")
        step_label = {0: FIXED, params.q1 % p: STEP1, params.q2 % p: STEP2}
        labels = []
        for j, v in enumerate(images, start=1):
            lab = step_label.get((v - j) % p)
            if lab is None:
                raise ParameterError(f"sigma({j}) - {j} = {v - j} is not a 0, q1 or q2 step mod {p}")
            labels.append(lab)
        return cls(p, params.q1, params.q2, images, tuple(labels))

    @classmethod
    def from_cycles(cls, params: GroupParams, cycles) -> "SteppedPermutation":
        images = list(range(1, params.p + 1))
        seen = set()
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                if a in seen or not 1 <= a <= params.p:
                    raise ParameterError(f"cycles overlap or leave [1..{params.p}] at {a}")
                seen.add(a)
                images[a - 1] = b
        return cls.from_images(params, images)

    @classmethod
    def parse(cls, params: GroupParams, text: str) -> "SteppedPermutation":
        """Cycle notation such as ``'(1 3 5)(2 4 6)'``; unlisted points are fixed."""
        import re

        cycles = [tuple(int(t) for t in re.split(r"[\s,]+", body.strip()) if t)
                  for body in re.findall(r"\(([^)]*)\)", text)]
        return cls.from_cycles(params, [c for c in cycles if c])

    @property
    def r(self) -> int:
        return self.labels.count(STEP1)

    @property
    def s(self) -> int:
        return self.labels.count(STEP2)

    def step(self, j: int) -> int:
        return (0, self.q1, self.q2)[self.labels[j - 1]]

    def cycles(self) -> list[tuple]:
        """Non-trivial cycles, each starting at its smallest point, sorted by start."""
        seen, out = set(), []
        for start in range(1, self.p + 1):
            if start in seen or self.images[start - 1] == start:
                continue
            cyc, j = [], start
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j - 1]
            out.append(tuple(cyc))
        return out

    def fixed_points(self) -> list[int]:
        return [j for j in range(1, self.p + 1) if self.images[j - 1] == j]

    @property
    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def one_line(self) -> str:
        return " ".join(map(str, self.images))

    def cycle_notation(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles()) or "()"

    def __str__(self):
        return self.cycle_notation()


def stepped_permutations(params: GroupParams, r: int | None = None, s: int | None = None,
                         max_p: int = DEFAULT_MAX_P):
    """Yield stepped permutations in lexicographic one-line order.

    With ``r`` and ``s`` given, only members of ``T(r, s)`` are produced.
    Depth-first over indices with a used-target bitmask and step budgets.
    """
    _require_oracle_params(params)
    p, q1, q2 = params.p, params.q1, params.q2
    if p > max_p:
        raise SizeGuardError(f"p = {p} exceeds the permutation oracle bound {max_p}")
    budget = None if r is None else (p - r - s, r, s)
    if budget is not None and min(budget) < 0:
        return
    options = []
    for i in range(p):
        opts = sorted(((i + d) % p, lab) for d, lab in ((0, FIXED), (q1, STEP1), (q2, STEP2)))
        options.append(opts)

    images = [0] * p
    labels = [0] * p
    used_counts = [0, 0, 0]

    def rec(i: int, used: int):
        if i == p:
            yield SteppedPermutation(p, q1, q2, tuple(v + 1 for v in images), tuple(labels))
            return
        for tgt, lab in options[i]:
            bit = 1 << tgt
            if used & bit:
                continue
            if budget is not None and used_counts[lab] >= budget[lab]:
                continue
            images[i] = tgt
            labels[i] = lab
            used_counts[lab] += 1
            yield from rec(i + 1, used | bit)
            used_counts[lab] -= 1

    yield from rec(0, 0)


def enumerate_T(params: GroupParams, r: int, s: int, max_p: int = DEFAULT_MAX_P) -> list[SteppedPermutation]:
    if r < 0 or s < 0 or r + s > params.p:
        raise ParameterError(f"need r, s >= 0 and r + s <= p, got ({r}, {s})")
    return list(stepped_permutations(params, r, s, max_p=max_p))


@dataclass
class ClassCensus:
    """Per-(r, s) tallies over all stepped permutations."""

    count: int = 0
    signed: int = 0
    cycle_types: set = field(default_factory=set)
    signs: set = field(default_factory=set)


def census(params: GroupParams, max_p: int = DEFAULT_MAX_P) -> dict[tuple[int, int], ClassCensus]:
    out: dict[tuple[int, int], ClassCensus] = {}
    for sigma in stepped_permutations(params, max_p=max_p):
        entry = out.setdefault((sigma.r, sigma.s), ClassCensus())
        sg = sigma.sign
        entry.count += 1
        entry.signed += sg
        entry.cycle_types.add(sigma.cycle_type())
        entry.signs.add(sg)
    return out


def det_from_census(params: GroupParams, tally: dict) -> SparsePolynomial:
    """``1 - det(C)`` from the per-class signed sums; entries are 1, -x, -y."""
    terms = {}
    for (r, s), c in tally.items():
        if (r, s) == (0, 0):
            continue
        terms[(r, s)] = -((-1) ** (r + s)) * c.signed
    phi = SparsePolynomial(terms)
    return phi if params.definite else phi.flip_y()


def det_via_permutations(params: GroupParams, max_p: int = DEFAULT_MAX_P) -> SparsePolynomial:
    """The invariant polynomial as ``1 - det(C)`` summed over stepped permutations."""
    return det_from_census(params, census(params, max_p=max_p))


@dataclass(frozen=True)
class CycleInfo:
    start: int
    points: tuple
    word: tuple  # step sizes in traversal order
    r: int
    s: int
    l: int


@dataclass
class CycleStats:
    cycles: list
    k: int
    r: int
    s: int
    l: int
    sign: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self):
        if self.violations:
            raise LemmaViolation("; ".join(self.violations))
        return self


def cycle_stats(sigma: SteppedPermutation, params: GroupParams) -> CycleStats:
    """Per-cycle step counts and the cycle-structure predictions they must satisfy.

    Predictions checked: every cycle carries ``r/k`` q1-steps, ``s/k`` q2-steps and
    weight ``l/k`` with ``k = gcd(r, s, l)``; each cycle has
    ``gcd(r_i, s_i, l_i) = 1``; ``sign = (-1)^(r + s + gcd(r, s, l))``.
    """
    p = params.p
    infos = []
    for cyc in sigma.cycles():
        word = tuple(sigma.step(j) for j in cyc)
        ri = sum(1 for j in cyc if sigma.labels[j - 1] == STEP1)
        si = len(cyc) - ri
        num = ri * params.q1 + si * params.q2
        infos.append(CycleInfo(cyc[0], cyc, word, ri, si, num // p if num % p == 0 else -1))
    r, s = sigma.r, sigma.s
    num = r * params.q1 + s * params.q2
    l = num // p
    k = len(infos)
    bad = []
    if num % p:
        bad.append(f"p = {p} does not divide r*q1 + s*q2 = {num}")
    g = gcd(r, s, l)
    if k != g:
        bad.append(f"k = {k} cycles but gcd(r, s, l) = {g}")
    for c in infos:
        if c.l < 0:
            bad.append(f"cycle {c.points}: weight not integral")
        elif gcd(c.r, c.s, c.l) != 1:
            bad.append(f"cycle {c.points}: gcd(r_i, s_i, l_i) = {gcd(c.r, c.s, c.l)}")
        if k and (c.r * k != r or c.s * k != s or c.l * k != l):
            bad.append(f"cycle {c.points}: (r_i, s_i, l_i) = ({c.r}, {c.s}, {c.l}) not (r, s, l)/k")
    predicted = -1 if (r + s + g) % 2 else 1
    if sigma.sign != predicted:
        bad.append(f"sign {sigma.sign} != (-1)^(r+s+gcd) = {predicted}")
    return CycleStats(infos, k, r, s, l, sigma.sign, bad)


def cycle_type_counts(perms) -> Counter:
    return Counter(sig.cycle_type() for sig in perms)
