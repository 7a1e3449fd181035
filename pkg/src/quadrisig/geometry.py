"""Traversal geometry on [p] and the constructive witnesses for T(r, s)."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import LemmaViolation, NotInSupport, ParameterError
from .params import GroupParams
from .permutations import STEP1, STEP2, SteppedPermutation, _require_oracle_params


def _wrap(x: int, p: int) -> int:
    """Representative of ``x`` mod p in ``1..p``."""
    return (x - 1) % p + 1


def orbit_position(start: int, x: int, m: int, p: int) -> int | None:
    """Number of m-steps from ``start`` to ``x`` on [p], or None if never reached."""
    g = gcd(m, p)
    if (x - start) % g:
        return None
    n = p // g
    mg, pg = m // g, p // g
    inv = pow(mg, -1, pg) if pg > 1 else 0
    return ((x - start) // g * inv) % n


def is_m_ordered(points, m: int, p: int) -> bool:
    """True iff the m-step traversal of [p] from ``points[0]`` meets them in order."""
    points = [int(x) for x in points]
    orbit_len = p // gcd(m, p)
    if not 3 <= len(points) <= orbit_len:
        raise ParameterError(f"need 3 <= n <= {orbit_len} points, got {len(points)}")
    g = gcd(p, m)
    if any((x - points[0]) % g for x in points):
        return False
    pos = [orbit_position(points[0], x, m, p) for x in points]
    return all(a < b for a, b in zip(pos, pos[1:]))


def _walk_until(start: int, stop, m: int, p: int) -> tuple[list[int], int]:
    """Points strictly after ``start`` along m-steps until one satisfying ``stop``."""
    out, x = [], start
    for _ in range(p):
        x = _wrap(x + m, p)
        if stop(x):
            return out, x
        out.append(x)
    raise LemmaViolation(f"m-step walk from {start} never reached its target")


@dataclass(frozen=True)
class CycleGeometry:
    d_points: tuple
    e_points: tuple
    matching: tuple  # U(j), 1-based
    v_sets: tuple
    w_sets: tuple

    def partitions_complement(self, cycle_points, p: int) -> bool:
        """V_j pairwise disjoint with union equal to the points the cycle fixes."""
        seen = set()
        for v in self.v_sets:
            if seen & set(v):
                return False
            seen |= set(v)
        return seen == set(range(1, p + 1)) - set(cycle_points)


def cycle_geometry(cycle, params: GroupParams) -> CycleGeometry:
    """d/e points, matching U, and the V_j / W_j sets of a cycle.

    ``cycle`` lists points in traversal order.  It is read from its first point
    when that point is entered by a q2-step; otherwise it is rotated to the first
    point that is.
    """
    p, q1, q2 = params.p, params.q1, params.q2
    pts = [int(x) for x in cycle]
    n = len(pts)
    steps = [(pts[(i + 1) % n] - pts[i]) % p for i in range(n)]
    if any(st not in (q1 % p, q2 % p) for st in steps):
        raise ParameterError(f"cycle {tuple(pts)} has a step that is neither q1 nor q2")
    if q2 % p not in steps:
        raise ParameterError("no q2-step in cycle")
    if steps[-1] != q2 % p:
        first = next(i for i in range(n) if steps[i - 1] == q2 % p)
        pts = pts[first:] + pts[:first]
        steps = steps[first:] + steps[:first]

    d, e = [], []
    for i, st in enumerate(steps):
        if i == 0 or steps[i - 1] == q2 % p:
            d.append(pts[i])
        if st == q2 % p:
            e.append(pts[i])

    dset = {x: j for j, x in enumerate(d, start=1)}
    matching, v_sets = [], []
    for ej in e:
        between, hit = _walk_until(ej, lambda x: x in dset, q1, p)
        matching.append(dset[hit])
        v_sets.append(frozenset(between))

    sk = len(e)
    w_sets = []
    for j in range(sk):
        nxt = (j + 1) % sk
        a = _wrap(d[nxt] - q1, p)
        b = _wrap(e[nxt] + q1, p)
        between, _ = _walk_until(a, lambda x: x == b or x == a, q1, p)
        w_sets.append(frozenset(between))
    return CycleGeometry(tuple(d), tuple(e), tuple(matching), tuple(v_sets), tuple(w_sets))


@dataclass(frozen=True)
class LatticePath:
    vertices: tuple
    labels: tuple  # STEP1 for (1, 0), STEP2 for (0, 1)

    def word(self, q1: int, q2: int) -> tuple:
        return tuple(q1 if lab == STEP1 else q2 for lab in self.labels)

    def max_deviation(self) -> int:
        """``max |(x_j - x_i) s - (y_j - y_i) r|`` over all vertex pairs."""
        r, s = self.vertices[-1]
        vals = [x * s - y * r for x, y in self.vertices]
        return max(vals) - min(vals)


def lattice_path(r: int, s: int) -> LatticePath:
    """Staircase from (0, 0) to (r, s) hugging the line ``s*x = r*y``.

    From (x, y) step right iff ``s*x <= r*y`` (ties go right), never overshooting.
    """
    if r < 0 or s < 0 or r + s < 1:
        raise ParameterError(f"need r, s >= 0 and r + s >= 1, got ({r}, {s})")
    x = y = 0
    verts, labels = [(0, 0)], []
    for _ in range(r + s):
        if x < r and (y == s or s * x <= r * y):
            x += 1
            labels.append(STEP1)
        else:
            y += 1
            labels.append(STEP2)
        verts.append((x, y))
    return LatticePath(tuple(verts), tuple(labels))


def canonical_element(params: GroupParams, r: int, s: int) -> SteppedPermutation:
    """Explicit member of ``T(r, s)``: k copies of the lattice-path cycle.

    With ``k = gcd(r, s, l)``, cycle j starts at ``1 + (j - 1)(q2 - q1)`` and follows
    the step word of ``lattice_path(r/k, s/k)``.
    """
    _require_oracle_params(params)
    p, q1, q2 = params.p, params.q1, params.q2
    l = params.weight(r, s)
    if l is None or r < 0 or s < 0 or not 0 < r + s <= p:
        raise NotInSupport(f"not in support: ({r}, {s}) for {params}")
    k = gcd(r, s, l)
    word = lattice_path(r // k, s // k).word(q1, q2)
    cycles = []
    for j in range(1, k + 1):
        x = _wrap(1 + (j - 1) * (q2 - q1), p)
        cyc = [x]
        for st in word[:-1]:
            x = _wrap(x + st, p)
            cyc.append(x)
        if _wrap(x + word[-1], p) != cyc[0] or len(set(cyc)) != len(cyc):
            raise LemmaViolation(f"lattice word does not close into a simple cycle at {params}, ({r}, {s})")
        cycles.append(tuple(cyc))
    try:
        sigma = SteppedPermutation.from_cycles(params, cycles)
    except ParameterError as exc:
        raise LemmaViolation(f"witness cycles are not disjoint: {exc}") from None
    if (sigma.r, sigma.s) != (r, s):
        raise LemmaViolation(f"witness lands in T({sigma.r}, {sigma.s}), expected T({r}, {s})")
    return sigma
