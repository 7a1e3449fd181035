"""``quadrisig`` command line: expand, signature, sweep, verify, witness, example.

Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
Errors go to stderr as one line of JSON.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .asymptotics import convergence_table, default_workers
from .errors import QuadrisigError
from .expansion import cr_map, expand, expand_modular
from .geometry import cycle_geometry
from .params import Form, GroupParams
from .permutations import SteppedPermutation, cycle_stats, enumerate_T
from .geometry import canonical_element
from .signature import signature
from .verify import T24_CYCLES, run_verify

EXPAND_MAX_P = 64
ORACLE_MAX_P = 12
SWEEP_MAX_P = 10**7


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _guard(value: int, limit: int, what: str, force: bool):
    if value > limit and not force:
        raise UsageError(f"{what} = {value} exceeds the default guard {limit}; pass --force to override")


def _params(args) -> GroupParams:
    return GroupParams(args.p, args.q1, args.q2, Form.parse(args.form))


def poly_json(params: GroupParams, poly) -> dict:
    terms = []
    for (r, s), c in poly.terms.items():
        l = (r * params.q1 + s * params.q2) // params.p
        terms.append({"r": r, "s": s, "l": l, "coeff": str(c), "sign": 1 if c > 0 else -1})
    terms.sort(key=lambda t: (t["l"], t["r"]))
    return {"p": params.p, "q1": params.q1, "q2": params.q2, "form": params.form.value,
            "polynomial": str(poly), "terms": terms}


def signature_json(params: GroupParams) -> dict:
    sig = signature(params)
    return {"n_plus": sig.n_plus, "n_minus": sig.n_minus, "ratio": str(sig.ratio)}


def permutation_json(sigma: SteppedPermutation, params: GroupParams) -> dict:
    st = cycle_stats(sigma, params)
    return {
        "p": params.p, "q1": params.q1, "q2": params.q2,
        "one_line": sigma.one_line(), "cycles": sigma.cycle_notation(),
        "r": st.r, "s": st.s, "l": st.l, "k": st.k, "sign": st.sign,
        "per_cycle": [{"start": c.start, "word": list(c.word), "r": c.r, "s": c.s, "l": c.l}
                      for c in st.cycles],
        "violations": st.violations,
    }


def cmd_expand(args, out):
    params = _params(args)
    _guard(params.p, EXPAND_MAX_P, "p", args.force)
    poly = expand_modular(params) if args.backend == "modular" else expand(params)
    out.write(_dump(poly_json(params, poly)) + "\n")
    return 0


def cmd_signature(args, out):
    out.write(_dump(signature_json(_params(args))) + "\n")
    return 0


def cmd_sweep(args, out):
    form = Form.parse(args.form)
    if args.p_step < 1 or args.p_min > args.p_max:
        raise UsageError("empty p range")
    _guard(args.p_max, SWEEP_MAX_P, "p-max", args.force)
    report = convergence_table(args.q1, args.q2, form, range(args.p_min, args.p_max + 1, args.p_step),
                               workers=args.threads or default_workers())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "q1", "q2", "form", "n_plus", "n_minus", "ratio", "limit", "abs_err", "ratio_float"])
    for row in report.rows:
        w.writerow([row.p, args.q1, args.q2, form.value, row.n_plus, row.n_minus,
                    str(row.ratio), str(row.limit), str(row.error), f"{float(row.ratio):.12g}"])
    out.write(buf.getvalue())
    for p in report.skipped:
        sys.stderr.write(_dump({"notice": "skipped", "p": p, "reason": "need q2 < p and gcd(p, q1, q2) = 1"}) + "\n")
    return 0


def cmd_verify(args, out):
    t0 = time.perf_counter()
    report = run_verify(args.p_max, oracle_max=ORACLE_MAX_P if not args.force else args.p_max)
    data = report.as_dict()
    data["seconds"] = round(time.perf_counter() - t0, 3)
    out.write(json.dumps(data, indent=2) + "\n")
    return 0 if report.passed else 1


def cmd_witness(args, out):
    params = GroupParams(args.p, args.q1, args.q2, Form.parse(args.form))
    _guard(params.p, 10**4, "p", args.force)
    sigma = canonical_element(params, args.r, args.s)
    out.write(_dump(permutation_json(sigma, params)) + "\n")
    return 0


def example_data(name: str) -> dict:
    if name == "phi623":
        params = GroupParams(6, 2, 3, Form.DEFINITE)
        return {**poly_json(params, expand(params)), "signature": signature_json(params)}
    if name == "phi211":
        params = GroupParams(2, 1, 1, Form.INDEFINITE)
        cmap = cr_map(params)
        comp = lambda terms: [{"magnitude": m, "magnitude_squared": round(m * m), "r": r, "s": s}
                              for m, r, s in terms]
        return {**poly_json(params, expand(params)), "signature": signature_json(params),
                "cr_map": {"F": comp(cmap.f_terms), "G": comp(cmap.g_terms)}}
    if name == "t24":
        params = GroupParams(24, 3, 16, Form.DEFINITE)
        sigma = SteppedPermutation.from_cycles(params, T24_CYCLES)
        geo = cycle_geometry(T24_CYCLES[0], params)
        return {
            **permutation_json(sigma, params),
            "fixed_points": sigma.fixed_points(),
            "geometry_C1": {
                "d": list(geo.d_points), "e": list(geo.e_points), "U": list(geo.matching),
                "V": [sorted(v) for v in geo.v_sets], "W": [sorted(w) for w in geo.w_sets],
            },
        }
    raise UsageError(f"unknown example {name!r}")


def cmd_example(args, out):
    out.write(json.dumps(example_data(args.name), indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="quadrisig", description="Signature pairs of group-invariant CR maps.")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("-o", "--out", help="write output here instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple(sp):
        sp.add_argument("p", type=int)
        sp.add_argument("q1", type=int)
        sp.add_argument("q2", type=int)
        sp.add_argument("--form", default="u2", choices=["u2", "u11"])

    sp = sub.add_parser("expand", help="exact polynomial as JSON")
    triple(sp)
    sp.add_argument("--backend", default="cyclotomic", choices=["cyclotomic", "modular"])
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("signature", help="signature pair via the sign law")
    triple(sp)
    sp.set_defaults(func=cmd_signature)

    sp = sub.add_parser("sweep", help="positivity ratios over a range of p as CSV")
    sp.add_argument("--q1", type=int, required=True)
    sp.add_argument("--q2", type=int, required=True)
    sp.add_argument("--form", default="u2", choices=["u2", "u11"])
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--p-step", type=int, default=1)
    sp.add_argument("--threads", type=int, default=0)
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="run every cross-check up to p-max")
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="lift the permutation-oracle bound")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("witness", help="explicit member of T(r, s)")
    sp.add_argument("p", type=int)
    sp.add_argument("q1", type=int)
    sp.add_argument("q2", type=int)
    sp.add_argument("r", type=int)
    sp.add_argument("s", type=int)
    sp.add_argument("--form", default="u2", choices=["u2", "u11"])
    sp.add_argument("--force", action="store_true")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("example", help="regenerate a worked example")
    sp.add_argument("name", choices=["phi623", "phi211", "t24"])
    sp.set_defaults(func=cmd_example)
    return ap


def _error(kind: str, message: str) -> None:
    sys.stderr.write(_dump({"error": kind, "message": message}) + "\n")


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.out:
            with open(args.out, "w", newline="\n") as fh:
                return args.func(args, fh)
        return args.func(args, stdout)
    except UsageError as exc:
        _error("usage", str(exc))
        return 2
    except QuadrisigError as exc:
        _error(type(exc).__name__, str(exc))
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
