"""Cross-checks of every expansion route against the sign law and the lemmas."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .asymptotics import weight_profile
from .expansion import expand, expand_modular
from .geometry import canonical_element, cycle_geometry, is_m_ordered
from .params import Form, GroupParams, canonicalize, valid_pairs
from .permutations import SteppedPermutation, census, cycle_stats, det_from_census, stepped_permutations
from .signature import step_gcd_sign, signature, su11_params, su11_signature, support

FORMS = (Form.DEFINITE, Form.INDEFINITE)


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str):
        self.failures.append(msg)

    def as_dict(self, limit: int = 10) -> dict:
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "n_failures": len(self.failures), "failures": self.failures[:limit]}


@dataclass
class Report:
    p_max: int
    checks: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {"p_max": self.p_max, "passed": self.passed,
                "checks": [c.as_dict() for c in self.checks], "notes": self.notes}


def _all_params(p_max, *, oracle=False, p_min=1):
    for p in range(p_min, p_max + 1):
        pairs = valid_pairs(p, min_q1=1, strict=True) if oracle else valid_pairs(p, ordered=False)
        for q1, q2 in pairs:
            for form in FORMS:
                yield GroupParams(p, q1, q2, form)


def check_sign_law(p_max: int, expansions: dict) -> tuple[Check, dict]:
    """Support and sign predictions against the exact expansion, all (q1, q2)."""
    chk = Check("sign_law")
    alt_disagree = alt_total = 0
    prose = {"odd_weight_even_s_positive": 0, "odd_weight_odd_s_positive": 0}
    for params in _all_params(p_max):
        chk.cases += 1
        poly = expansions.setdefault(params, expand(params))
        sup = {(e.r, e.s): e for e in support(params)}
        if set(sup) != set(poly.terms):
            chk.fail(f"{params}: support {sorted(set(sup) ^ set(poly.terms))} mismatch")
            continue
        for key, e in sup.items():
            if (poly.terms[key] > 0) != (e.sign > 0):
                chk.fail(f"{params}: sign of x^{key[0]} y^{key[1]}")
            alt_total += 1
            if step_gcd_sign(params, *key) != e.sign:
                alt_disagree += 1
            if (params.form is Form.INDEFINITE and params.q1 % 2 and params.q2 % 2
                    and e.l % 2 and poly.terms[key] > 0):
                prose["odd_weight_odd_s_positive" if key[1] % 2 else "odd_weight_even_s_positive"] += 1
        if poly.degree() > params.p:
            chk.fail(f"{params}: degree {poly.degree()} > p")
    notes = {
        "gcd_q1_q2_l_predicate": {
            "monomials": alt_total, "disagreements_with_gcd_r_s_l": alt_disagree},
        "indefinite_odd_odd_case": prose,
    }
    return chk, notes


def check_backends(p_max: int, expansions: dict) -> Check:
    chk = Check("expand_vs_expand_modular")
    for params in _all_params(p_max):
        chk.cases += 1
        poly = expansions.setdefault(params, expand(params))
        if expand_modular(params) != poly:
            chk.fail(str(params))
    return chk


def check_canonical(p_max: int, expansions: dict, expand_max: int = 10) -> Check:
    chk = Check("canonicalize_invariance")
    for params in _all_params(p_max):
        chk.cases += 1
        canon = canonicalize(params.p, params.q1, params.q2, params.form)
        if canonicalize(canon.p, canon.q1, canon.q2, canon.form) != canon:
            chk.fail(f"{params}: not idempotent")
        if params.p <= expand_max:
            a = expansions.setdefault(params, expand(params))
            b = expansions.setdefault(canon, expand(canon))
            # the definite-form swap relabels the coordinates, hence x <-> y
            if a != b and not (params.definite and a.swap_xy() == b):
                chk.fail(f"{params}: expansion differs from {canon}")
        if params.form is Form.DEFINITE:
            swapped = GroupParams(params.p, params.q2, params.q1, params.form)
            if signature(swapped) != signature(params):
                chk.fail(f"{params}: swap changes signature")
    return chk


def check_oracle(p_max: int, expansions: dict) -> tuple[Check, Check]:
    """Permutation sum against both expansions; class sizes against coefficients."""
    eq = Check("permutation_oracle_equivalence")
    lem = Check("cycle_structure_lemmas")
    for params in _all_params(p_max, oracle=True):
        eq.cases += 1
        tally = census(params)
        poly = expansions.setdefault(params, expand(params))
        if det_from_census(params, tally) != poly or expand_modular(params) != poly:
            eq.fail(f"{params}: determinant expansion disagrees")
        for (r, s), c in tally.items():
            if (r, s) == (0, 0):
                continue
            l = (r * params.q1 + s * params.q2) // params.p
            sign = (-1) ** (gcd(r, s, l) + 1)
            if not params.definite:
                sign *= (-1) ** s
            if poly[(r, s)] != sign * c.count:
                eq.fail(f"{params}: a({r},{s}) = {poly[(r, s)]} but |T| = {c.count}, sign {sign}")
            if params.definite and (len(c.cycle_types) != 1 or len(c.signs) != 1):
                lem.fail(f"{params}: T({r},{s}) has cycle types {sorted(c.cycle_types)}")
        if params.definite:
            for sigma in stepped_permutations(params):
                if sigma.r + sigma.s == 0:
                    continue
                lem.cases += 1
                st = cycle_stats(sigma, params)
                if not st.ok:
                    lem.fail(f"{params} {sigma}: {st.violations[0]}")
    return eq, lem


def check_witnesses(p_max: int) -> Check:
    chk = Check("witness_soundness")
    for p in range(3, p_max + 1):
        for q1, q2 in valid_pairs(p, min_q1=1, strict=True):
            params = GroupParams(p, q1, q2)
            members = {}
            for sigma in stepped_permutations(params):
                members.setdefault((sigma.r, sigma.s), set()).add(sigma.images)
            for e in support(params):
                chk.cases += 1
                try:
                    w = canonical_element(params, e.r, e.s)
                except Exception as exc:  # noqa: BLE001 - any failure is a finding
                    chk.fail(f"{params} ({e.r},{e.s}): {exc}")
                    continue
                if w.images not in members.get((e.r, e.s), set()):
                    chk.fail(f"{params} ({e.r},{e.s}): witness {w} not enumerated")
            if set(members) - {(0, 0)} != {(e.r, e.s) for e in support(params)}:
                chk.fail(f"{params}: nonempty classes differ from the support")
    return chk


def check_lattice_gap(p_max: int) -> Check:
    """``s*a - r*b`` is 0 or at least p in size for support points (a, b), (r, s)."""
    chk = Check("lattice_gap")
    for p in range(1, p_max + 1):
        for q1, q2 in valid_pairs(p, min_q1=1):
            pts = [(e.r, e.s) for e in support(GroupParams(p, q1, q2))]
            chk.cases += 1
            for a, b in pts:
                bad = [(r, s) for r, s in pts if 0 < abs(s * a - r * b) < p]
                if bad:
                    chk.fail(f"({p};{q1},{q2}): ({a},{b}) vs {bad[0]}")
                    break
    return chk


def check_su11(p_max: int, expansions: dict) -> Check:
    chk = Check("su11_signature")
    for p in range(2, p_max + 1):
        chk.cases += 1
        params = su11_params(p)
        poly = expansions.setdefault(params, expand(params))
        pos = sum(1 for c in poly.terms.values() if c > 0)
        got = (pos, len(poly) - pos)
        if got != tuple(su11_signature(p)) or tuple(signature(params)) != got:
            chk.fail(f"p = {p}: expansion {got}, closed form {tuple(su11_signature(p))}")
    return chk


def check_weight_bounds(p_max: int, q2_max: int = 12) -> Check:
    chk = Check("weight_bounds")
    for p in range(3, p_max + 1):
        for q2 in range(2, min(q2_max, p - 1) + 1):
            for q1 in range(1, q2):
                if gcd(q1, q2) != 1:
                    continue
                chk.cases += 1
                prof = weight_profile(GroupParams(p, q1, q2))
                if not prof.ok:
                    chk.fail(f"({p};{q1},{q2}): {prof.violations[0]}")
    return chk


T24_CYCLES = ((20, 23, 2, 18, 21, 24, 3, 19, 22, 1, 4), (7, 10, 13, 5, 8, 11, 14, 6, 9, 12, 15))


def check_worked_examples() -> Check:
    chk = Check("worked_examples")
    params = GroupParams(24, 3, 16)
    sigma = SteppedPermutation.from_cycles(params, T24_CYCLES)
    geo = cycle_geometry(T24_CYCLES[0], params)
    expected = [
        ((sigma.r, sigma.s), (16, 6)),
        (sigma.fixed_points(), [16, 17]),
        (geo.d_points, (20, 18, 19)),
        (geo.e_points, (2, 3, 4)),
        ([set(v) for v in geo.v_sets], [{5, 8, 11, 14, 17}, {6, 9, 12, 15}, {7, 10, 13, 16}]),
        ([set(w) for w in geo.w_sets], [{18, 21, 24, 3}, {19, 22, 1, 4}, {20, 23, 2}]),
        (cycle_stats(sigma, params).ok, True),
        (is_m_ordered((1, 4, 7), 3, 9), True),
    ]
    for got, want in expected:
        chk.cases += 1
        if got != want:
            chk.fail(f"got {got}, expected {want}")
    return chk


def run_verify(p_max: int, oracle_max: int = 12) -> Report:
    """All suites up to ``p_max``; brute-force permutation suites stop at ``oracle_max``."""
    report = Report(p_max)
    expansions: dict = {}
    sign_chk, notes = check_sign_law(p_max, expansions)
    report.notes.update(notes)
    omax = min(p_max, oracle_max)
    eq, lem = check_oracle(omax, expansions)
    report.checks += [
        sign_chk,
        check_backends(p_max, expansions),
        check_canonical(p_max, expansions),
        eq,
        lem,
        check_witnesses(omax),
        check_lattice_gap(p_max),
        check_su11(p_max, expansions),
        check_weight_bounds(max(p_max, 3)),
        check_worked_examples(),
    ]
    return report
