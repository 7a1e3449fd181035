"""The twelve acceptance criteria, each at its stated tolerance and time budget.

Run ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line per criterion;
the same lines appear in the terminal summary of any pytest run.
"""
import io
import json
import math
import random
import time
from fractions import Fraction
from math import gcd

import numpy as np
import pytest

from oracles import mp_phi
from quadrisig import (GroupParams, SparsePolynomial, SteppedPermutation, canonical_element,
                       classify_sign, convergence_table, cr_map, cycle_geometry, cycle_stats,
                       det_via_permutations, enumerate_T, expand, expand_modular, limit_ratio,
                       make_params, signature, su11_signature, support, weight_profile)
from quadrisig.cli import run
from quadrisig.params import valid_pairs
from quadrisig.permutations import census, stepped_permutations

C1 = (20, 23, 2, 18, 21, 24, 3, 19, 22, 1, 4)
C2 = (7, 10, 13, 5, 8, 11, 14, 6, 9, 12, 15)
T623_32 = ["(2 4 6 3 5)", "(1 3 5 2 4)", "(1 3 6 2 4)", "(1 3 6 2 5)", "(1 4 6 3 5)", "(1 4 6 2 5)"]
CASE_PAIRS = [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5)]


def report(num, ok, detail=""):
    print(f"\n{'PASS' if ok else 'FAIL'} criterion {num}: {detail}")


def oracle_triples(p_max):
    for p in range(3, p_max + 1):
        for q1, q2 in valid_pairs(p, min_q1=1, strict=True):
            for form in ("u2", "u11"):
                yield GroupParams(p, q1, q2, form)


def cli(*argv):
    out = io.StringIO()
    return run(list(argv), stdout=out), out.getvalue()


@pytest.mark.criterion(1, "golden expansion of the (6; 2, 3) group")
def test_criterion_01_golden_six_two_three():
    t0 = time.perf_counter()
    code, text = cli("expand", "6", "2", "3", "--form", "u2")
    elapsed = time.perf_counter() - t0
    got = SparsePolynomial({(t["r"], t["s"]): int(t["coeff"]) for t in json.loads(text)["terms"]})
    want = SparsePolynomial.parse("2x^3 - x^6 + 3y^2 + 6x^3y^2 - 3y^4 + y^6")
    ok = code == 0 and got == want and elapsed < 1
    report(1, ok, f"{got} in {elapsed:.3f}s")
    assert ok


@pytest.mark.criterion(2, "golden U(1,1) order-two group and its CR map")
def test_criterion_02_golden_two_one_one():
    t0 = time.perf_counter()
    params = make_params(2, 1, 1, "u11")
    poly = expand(params)
    cmap = cr_map(params)
    elapsed = time.perf_counter() - t0
    coeffs = [poly[(2, 0)], poly[(1, 1)], poly[(0, 2)]]
    f = sorted((round(m * m), r, s) for m, r, s in cmap.f_terms)
    g = sorted((round(m * m), r, s) for m, r, s in cmap.g_terms)
    ok = (coeffs == [1, -2, 1] and len(poly.terms) == 3 and tuple(signature(params)) == (2, 1)
          and f == [(1, 0, 2), (1, 2, 0)] and g == [(2, 1, 1)]
          and math.isclose(cmap.g_terms[0][0], math.sqrt(2), rel_tol=1e-15) and elapsed < 1)
    report(2, ok, f"coefficients {coeffs}, F {f}, G {g}")
    assert ok


@pytest.mark.criterion(3, "SU(1,1) closed form for 2 <= p <= 48 by full expansion")
def test_criterion_03_su11_closed_form():
    t0 = time.perf_counter()
    bad = []
    for p in range(2, 49):
        poly = expand(GroupParams(p, 1, p - 1, "u11"))
        pair = (sum(c > 0 for c in poly.terms.values()), sum(c < 0 for c in poly.terms.values()))
        closed = (2, p // 2) if p % 2 == 0 else (1, (p + 1) // 2)
        if pair != closed or tuple(su11_signature(p)) != closed:
            bad.append((p, pair, closed))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    report(3, ok, f"{len(bad)} mismatches in {elapsed:.1f}s")
    assert ok, bad


@pytest.mark.criterion(4, "oracle equivalence of three expansions for p <= 10")
def test_criterion_04_oracle_equivalence():
    t0 = time.perf_counter()
    bad, n = [], 0
    for params in oracle_triples(10):
        n += 1
        a, b, c = expand(params), expand_modular(params), det_via_permutations(params)
        if not a == b == c:
            bad.append((str(params), "backends"))
            continue
        for (r, s), cls in census(params).items():
            if (r, s) == (0, 0):
                continue
            l = params.weight(r, s)
            predicted = (-1) ** (gcd(r, s, l) + 1) * cls.count
            if not params.definite:
                predicted *= (-1) ** s
            if a[(r, s)] != predicted:
                bad.append((str(params), r, s))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300
    report(4, ok, f"{n} parameter sets, {len(bad)} discrepancies in {elapsed:.1f}s")
    assert ok, bad[:10]


@pytest.mark.criterion(5, "support and sign law against the expansion")
def test_criterion_05_support_and_sign():
    rng = random.Random(20240605)
    cases = list(oracle_triples(10))
    while len(cases) < len(list(oracle_triples(10))) + 50:
        p = rng.randint(2, 40)
        q1, q2 = rng.choice(list(valid_pairs(p, ordered=False)))
        cases.append(GroupParams(p, q1, q2, rng.choice(["u2", "u11"])))
    bad = []
    for params in cases:
        poly = expand(params)
        supp = {(e.r, e.s): e.sign for e in support(params)}
        actual = {rs: (1 if c > 0 else -1) for rs, c in poly.terms.items()}
        if supp != actual:
            bad.append(str(params))
        elif any(classify_sign(params, r, s) != sg for (r, s), sg in actual.items()):
            bad.append(str(params))
    ok = not bad
    report(5, ok, f"{len(cases)} parameter sets, {len(bad)} discrepancies")
    assert ok, bad


@pytest.mark.criterion(6, "the six stepped permutations of T(3, 2) for (6; 2, 3)")
def test_criterion_06_T623():
    params = make_params(6, 2, 3)
    got = {str(sig) for sig in enumerate_T(params, 3, 2)}
    want = {str(SteppedPermutation.parse(params, c)) for c in T623_32}
    witness = str(canonical_element(params, 3, 2))
    ok = got == want and len(got) == 6 and witness in got
    report(6, ok, f"{sorted(got)}, witness {witness}")
    assert ok


@pytest.mark.criterion(7, "worked (24; 3, 16) permutation and its cycle geometry")
def test_criterion_07_worked_geometry():
    params = make_params(24, 3, 16)
    sigma = SteppedPermutation.from_cycles(params, (C1, C2))
    geo = cycle_geometry(C1, params)
    ok = ((sigma.r, sigma.s) == (16, 6)
          and set(sigma.fixed_points()) == {16, 17}
          and geo.d_points == (20, 18, 19)
          and geo.e_points == (2, 3, 4)
          and geo.matching == (1, 2, 3)
          and geo.v_sets == ({5, 8, 11, 14, 17}, {6, 9, 12, 15}, {7, 10, 13, 16})
          and geo.w_sets == ({18, 21, 24, 3}, {19, 22, 1, 4}, {20, 23, 2}))
    report(7, ok, f"d {geo.d_points}, e {geo.e_points}")
    assert ok


@pytest.mark.criterion(8, "cycle-structure lemmas over every nonempty class for p <= 10")
def test_criterion_08_cycle_lemmas():
    bad, classes = [], 0
    for params in oracle_triples(10):
        if not params.definite:
            continue  # classes do not depend on the form
        types = {}
        for sig in stepped_permutations(params):
            if sig.r + sig.s == 0:
                continue
            stats = cycle_stats(sig, params)
            if not stats.ok:
                bad.append((str(params), str(sig), stats.violations))
            types.setdefault((sig.r, sig.s), set()).add(sig.cycle_type())
        classes += len(types)
        bad += [(str(params), rs, "cycle types differ") for rs, v in types.items() if len(v) > 1]
    ok = not bad
    report(8, ok, f"{classes} classes, {len(bad)} violations")
    assert ok, bad[:10]


@pytest.mark.criterion(9, "weight-count bounds, exhaustive and random")
def test_criterion_09_weight_bounds():
    t0 = time.perf_counter()
    bad, n = [], 0
    for p in range(2, 201):
        for q2 in range(1, min(p, 13)):
            for q1 in range(1, q2 + 1):
                if gcd(q1, q2) == 1 and gcd(p, q1, q2) == 1:
                    n += 1
                    prof = weight_profile(GroupParams(p, q1, q2))
                    if not prof.ok or (q1 < q2 and prof.deviation_from_half() > q2):
                        bad.append((p, q1, q2, prof.violations))
    rng = random.Random(1729)
    for _ in range(100):
        q2 = rng.randint(2, 12)
        q1 = rng.choice([a for a in range(1, q2) if gcd(a, q2) == 1])
        p = rng.randint(q2 + 1, 10**6)
        n += 1
        prof = weight_profile(GroupParams(p, q1, q2))
        if not prof.ok or prof.deviation_from_half() > q2:
            bad.append((p, q1, q2, prof.violations))
    report(9, not bad, f"{n} parameter sets, {len(bad)} violations in {time.perf_counter() - t0:.1f}s")
    assert not bad, bad[:10]


@pytest.mark.criterion(10, "positivity ratios converge to their limits at rate q2^2/p")
def test_criterion_10_asymptotics():
    t0 = time.perf_counter()
    p_grid = sorted({int(round(x)) + d for x in np.geomspace(100, 10**5, 25) for d in (0, 1)})
    bad, worst = [], 0.0
    for q1, q2 in CASE_PAIRS:
        for form in ("u2", "u11"):
            rep = convergence_table(q1, q2, form, p_grid)
            assert rep.parity_classes() == {0, 1}
            for row in rep.rows:
                budget = Fraction(5 * q2 * q2, row.p)
                worst = max(worst, float(row.error * row.p / (q2 * q2)))
                if row.error > budget:
                    bad.append((q1, q2, form, row.p, float(row.error)))
            if rep.fitted_constant() > 5 * q2 * q2:
                bad.append((q1, q2, form, "fitted constant", float(rep.fitted_constant())))
    half = convergence_table(1, 1, "u11", [100001]).rows[0]
    one = convergence_table(1, 2, "u2", [100001]).rows[0]
    cross = (abs(half.ratio - Fraction(1, 2)) < Fraction(1, 1000)
             and abs(one.ratio - 1) < Fraction(1, 1000) and limit_ratio(1, 1, "u11") == Fraction(1, 2))
    elapsed = time.perf_counter() - t0
    ok = not bad and cross and elapsed < 120
    report(10, ok, f"worst p*err/q2^2 = {worst:.3f} (budget 5), cross-checks {cross}, {elapsed:.1f}s")
    assert ok, bad[:10]


@pytest.mark.criterion(11, "signature at p = 10^6 under 1 s; verify --p-max 10 under 5 min")
def test_criterion_11_performance():
    params = make_params(10**6, 3, 7)
    signature(make_params(1000, 3, 7))  # warm imports
    t0 = time.perf_counter()
    pair = signature(params)
    t_sig = time.perf_counter() - t0
    t0 = time.perf_counter()
    code, text = cli("verify", "--p-max", "10")
    t_verify = time.perf_counter() - t0
    ok = t_sig < 1 and code == 0 and json.loads(text)["passed"] and t_verify < 300
    report(11, ok, f"signature {tuple(pair)} in {t_sig:.3f}s, verify in {t_verify:.1f}s (exit {code})")
    assert ok


@pytest.mark.criterion(12, "CR-map Hermitian identity at random points")
def test_criterion_12_cr_map_identity():
    # error is measured against max(|Phi|, ||F||^2 + ||G||^2): near the zero set of an
    # indefinite Phi the difference of squared norms cancels and no floating
    # evaluation can be pointwise relative-accurate there
    rng = random.Random(31337)
    worst, worst_pointwise, checked = 0.0, 0.0, 0
    for _ in range(20):
        p = rng.randint(1, 20)
        q1, q2 = rng.choice(list(valid_pairs(p, ordered=False)))
        indefinite = rng.random() < 0.5
        params = GroupParams(p, q1, q2, "u11" if indefinite else "u2")
        cmap = cr_map(params)
        for _ in range(100):
            z1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            z2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            phi = mp_phi(p, q1, q2, abs(z1) ** 2, abs(z2) ** 2, indefinite)
            f, g = cmap.components(z1, z2)
            scale = float(np.sum(np.abs(f) ** 2) + np.sum(np.abs(g) ** 2))
            err = abs(cmap.hermitian_value(z1, z2) - phi)
            worst = max(worst, err / max(abs(phi), scale))
            worst_pointwise = max(worst_pointwise, err / abs(phi))
            checked += 1
    ok = worst <= 1e-9
    report(12, ok, f"{checked} points, worst error {worst:.2e} relative to the Hermitian norm "
                   f"({worst_pointwise:.2e} pointwise)")
    assert ok
