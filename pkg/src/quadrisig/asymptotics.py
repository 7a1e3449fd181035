"""Weight counts and large-p positivity ratios, all from the O(p) support sweep."""
from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .errors import ParameterError
from .params import Form, GroupParams
from .signature import sign_array, support_arrays

log = logging.getLogger(__name__)


@dataclass
class WeightProfile:
    params: GroupParams
    counts: dict  # weight l -> N_l, for 1 <= l <= q2
    n: int
    n_even: int
    n_odd: int
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def deviation_from_half(self) -> Fraction:
        """``|N - p/2|``; at most q2 when every weight count is within 1 of its estimate."""
        return abs(Fraction(self.n) - Fraction(self.params.p, 2))


def weight_estimate(params: GroupParams, l: int) -> Fraction:
    """Continuum estimate of the number of support points of weight ``l``."""
    p, q1, q2 = params.p, params.q1, params.q2
    if 1 <= l <= q1:
        return Fraction(l * p, q1 * q2)
    if q1 < l <= q2:
        return Fraction((q2 - l) * p, q2 * (q2 - q1))
    raise ParameterError(f"weight {l} outside 1..{q2}")


def weight_profile(params: GroupParams) -> WeightProfile:
    """Per-weight support counts with the within-one bounds checked exactly.

    The bounds are those of a lattice-point count on the segment
    ``r*q1 + s*q2 = l*p`` inside ``r + s <= p``; they presume ``gcd(q1, q2) = 1``
    (otherwise whole weight classes are empty and violations are reported).
    """
    p, q1, q2 = params.p, params.q1, params.q2
    if not 1 <= q1 <= q2 < p:
        raise ParameterError(f"weight profile needs 1 <= q1 <= q2 < p, got {params}")
    r, s, l = support_arrays(params)
    hist = np.bincount(l, minlength=q2 + 1)
    counts = dict(zip(range(1, q2 + 1), hist[1:].tolist()))
    # exact integer form of |N_l - est| <= 1, scaled by the estimate's denominator;
    # object dtype once the products could leave int64
    dtype = np.int64 if p * q2 * q2 < 2**62 else object
    w = np.arange(1, q2 + 1).astype(dtype)
    n_l = hist[1:].astype(dtype)
    low = w <= q1
    den = np.where(low, q1 * q2, q2 * max(q2 - q1, 1)).astype(dtype)
    num = np.where(low, w * p, (q2 - w) * p).astype(dtype)
    bad = [
        f"weight {int(w[i])}: N_l = {int(n_l[i])}, estimate {Fraction(int(num[i]), int(den[i]))}"
        for i in np.flatnonzero(np.abs(n_l * den - num) > den)
    ]
    n = int(r.size)
    n_even = int(np.count_nonzero(l % 2 == 0))
    prof = WeightProfile(params, counts, n, n_even, n - n_even, bad)
    # the weight estimates sum to p/2 only when q1 < q2; q1 = q2 = 1 gives N = p + 1
    if q1 < q2 and prof.deviation_from_half() > q2:
        bad.append(f"|N - p/2| = {prof.deviation_from_half()} > q2 = {q2}")
    return prof


def _parity(value) -> int | None:
    if value is None:
        return None
    if isinstance(value, str):
        return {"even": 0, "odd": 1}[value.lower()]
    return int(value) % 2


def limit_ratio(q1: int, q2: int, form=Form.DEFINITE, p_parity=None) -> Fraction:
    """Large-p limit of ``N+/N`` for ``Gamma(p; q1, q2)``.

    ``p_parity`` (0/1, "even"/"odd", or p itself) only matters for the indefinite
    form with q1 even and q2 odd, where odd and even p have different limits.
    """
    form = Form.parse(form)
    if q1 < 1 or q2 < q1 or gcd(q1, q2) != 1:
        raise ParameterError(f"need 1 <= q1 <= q2 with gcd(q1, q2) = 1, got ({q1}, {q2})")
    a, b = q1 % 2, q2 % 2
    if not a and not b:
        raise ParameterError("q1 and q2 both even")
    if form is Form.INDEFINITE:
        if a and b:
            return Fraction(q1 * q2 + 1, 4 * q1 * q2)
        if a:
            d = q1 * (q2 - q1)
            return Fraction(d + 1, 4 * d)
        par = _parity(p_parity)
        if par is None:
            raise ParameterError("q1 even, q2 odd: the indefinite limit depends on the parity of p")
        d = q2 * (q2 - q1)
        return Fraction(d + 1, 4 * d) if par else Fraction(3 * d - 1, 4 * d)
    if a and not b:
        d = q1 * (q2 - q1)
        return Fraction(3 * d + 1, 4 * d)
    if a and b:
        return Fraction(3 * q1 * q2 + 1, 4 * q1 * q2)
    d = q2 * (q2 - q1)
    return Fraction(3 * d - 1, 4 * d)


@dataclass(frozen=True)
class RatioRow:
    p: int
    n_plus: int
    n: int
    ratio: Fraction
    limit: Fraction
    error: Fraction
    half_gap: Fraction  # |N - p/2|

    @property
    def n_minus(self) -> int:
        return self.n - self.n_plus


@dataclass
class RatioReport:
    q1: int
    q2: int
    form: Form
    rows: list
    skipped: list = field(default_factory=list)

    def fitted_constant(self) -> Fraction:
        """Smallest C with ``error <= C / p`` on every row."""
        return max((row.error * row.p for row in self.rows), default=Fraction(0))

    def parity_classes(self) -> set:
        return {row.p % 2 for row in self.rows}


def _row(q1: int, q2: int, form: Form, p: int) -> RatioRow:
    params = GroupParams(p, q1, q2, form)
    r, s, l = support_arrays(params)
    n = int(r.size)
    n_plus = int(np.count_nonzero(sign_array(params, r, s, l) > 0))
    ratio = Fraction(n_plus, n)
    lim = limit_ratio(q1, q2, form, p % 2)
    return RatioRow(p, n_plus, n, ratio, lim, abs(ratio - lim), abs(Fraction(n) - Fraction(p, 2)))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("QUADRISIG_THREADS", "1")))
    except ValueError:
        return 1


def convergence_table(q1: int, q2: int, form, p_list, workers: int | None = None) -> RatioReport:
    """Empirical ratio against its limit for every admissible ``p`` in ``p_list``.

    Rows come back sorted by p; each row is matched with the limit of its own
    p-parity class.
    """
    form = Form.parse(form)
    if q1 < 1:
        raise ParameterError("q1 = 0 has weight-zero terms; no limit ratio is defined")
    limit_ratio(q1, q2, form, 0)  # parameter check
    good, skipped = [], []
    for p in sorted(set(int(x) for x in p_list)):
        if p <= q2 or gcd(p, q1, q2) != 1:
            log.warning("skipping p = %d: (p; q1, q2) = (%d; %d, %d) is not admissible", p, p, q1, q2)
            skipped.append(p)
        else:
            good.append(p)
    workers = workers or default_workers()
    if workers > 1 and len(good) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda p: _row(q1, q2, form, p), good))
    else:
        rows = [_row(q1, q2, form, p) for p in good]
    return RatioReport(q1, q2, form, rows, skipped)
