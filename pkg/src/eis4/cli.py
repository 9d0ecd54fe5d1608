"""``eis4`` command-line front end.

Every subcommand writes JSON (default) or CSV to stdout and diagnostics to
stderr.  Exit codes: 0 pass, 1 fail, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .exact_math import GaussianRational, LForm, fmt_rational, mat_kernel, mat_rank
from .qseries import default_terms

__all__ = ["main", "run", "build_parser", "paper_suite"]


class _Outcome:
    def __init__(self, payload, rows, ok: bool = True):
        self.payload = payload
        self.rows = rows
        self.ok = ok


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt_rational(x)
    if isinstance(x, (GaussianRational, LForm)):
        return x.to_json()
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _emit(out: _Outcome, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(_jsonable(out.payload), separators=(",", ":")) + "\n")
        return
    rows = [{k: _csv_cell(v) for k, v in r.items()} for r in out.rows]
    if not rows:
        return
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    stream.write(buf.getvalue())


def _csv_cell(v):
    v = _jsonable(v)
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return v


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_qexp(a) -> _Outcome:
    from .eisenstein import eis_G, eis_H, eis_H2

    N = a.terms or default_terms()
    if a.series == "H2":
        if a.k2 is None:
            raise ValueError("--k2 is required for H2")
        s = eis_H2(a.k, a.k2, N)
    else:
        s = (eis_H if a.series == "H" else eis_G)(a.k, N)
    payload = {"series": a.series, "k": a.k, **({"k2": a.k2} if a.series == "H2" else {}), **s.to_json()}
    rows = []
    for n, c in enumerate(s.coeffs, start=1):
        lf = c if isinstance(c, LForm) else LForm.const(c)
        for g in lf.support():
            v = lf.coeff(g)
            rows.append({"n": n, "generator": g.name, "re": v.re, "im": v.im})
    return _Outcome(payload, rows)


def _cmd_verify(a) -> _Outcome:
    from . import verifier

    N = a.terms or default_terms()
    c = a.claim
    if c == "shuffle":
        k1, k2 = a.k1 or a.k, a.k2
        if k1 is None or k2 is None:
            raise ValueError("shuffle needs --k1 and --k2")
        r = verifier.verify_shuffle(k1, k2, N)
    elif c == "theta":
        r = verifier.verify_theta(a.terms or 100)
    else:
        k = a.k or a.k1
        if k is None:
            raise ValueError(f"{c} needs --k")
        fn = {"g-decomp": verifier.verify_G_decomp, "g-product": verifier.verify_G_product,
              "im-vanish": verifier.verify_im_vanishing}[c]
        r = fn(k, N)
    row = {"claim": r.claim, "status": r.status, "checked_through": r.checked_through,
           "first_failure_n": None if r.first_failure is None else r.first_failure[0]}
    return _Outcome(r.to_json(), [row], r.passed)


def _cmd_rank(a) -> _Outcome:
    from .period_polys import build_Mk

    r = mat_rank(build_Mk(a.mk))
    return _Outcome({"rank": r}, [{"k": a.mk, "rank": r}])


def _cmd_det(a) -> _Outcome:
    from .period_polys import check_det_ord2

    rep = check_det_ord2(a.aw)
    d = rep.to_json()
    return _Outcome(d, [d], rep.status == "pass")


def _cmd_kernel(a) -> _Outcome:
    from .period_polys import delta_tilde, rep_matrix

    basis = mat_kernel(rep_matrix(delta_tilde(), a.delta_tilde)) if a.delta_tilde >= 6 and a.delta_tilde % 2 == 0 \
        else None
    if basis is None:
        raise ValueError("k must be even and >= 6")
    payload = {"k": a.delta_tilde, "dim": len(basis), "basis": basis}
    rows = [{"vector": i, **{f"x{e}": v for e, v in enumerate(vec)}} for i, vec in enumerate(basis, start=1)]
    return _Outcome(payload, rows or [{"vector": None}])


def _cmd_relations(a) -> _Outcome:
    from .relations import ERRATA, atilde_vector, num_modular_relations

    js = [a.j] if a.j is not None else list(range(1, num_modular_relations(a.k) + 1))
    rels, rows = [], []
    for j in js:
        vec = atilde_vector(a.k, j)
        entry = {"j": j, "atilde": list(vec)}
        if a.paper_literal:
            entry["atilde_paper_literal"] = list(atilde_vector(a.k, j, paper_literal=True))
        errs = [e for e in ERRATA if e.where == f"atilde({a.k},{j})"]
        if errs:
            entry["errata"] = [{"index": e.index, "printed": e.printed, "corrected": e.corrected} for e in errs]
        rels.append(entry)
        for p, v in enumerate(vec, start=1):
            row = {"k": a.k, "j": j, "p": p, "atilde": v}
            if a.paper_literal:
                row["atilde_paper_literal"] = entry["atilde_paper_literal"][p - 1]
            rows.append(row)
    return _Outcome({"k": a.k, "relations": rels}, rows)


def _cmd_conjecture(a) -> _Outcome:
    from .relations import conj_vector

    vec = conj_vector(a.N, a.k, a.j)
    rows = [{"N": a.N, "k": a.k, "j": a.j, "i": i, "a": v} for i, v in enumerate(vec, start=1)]
    return _Outcome({"N": a.N, "k": a.k, "j": a.j, "vector": list(vec)}, rows)


def _cmd_express(a) -> _Outcome:
    from .relations import express_in_modular

    r = express_in_modular(a.N, a.k, a.j, paper_literal=a.paper_literal)
    coeffs = r.coefficients or ()
    rows = [{"N": a.N, "k": a.k, "j": a.j, "consistent": r.consistent, "index": i, "coefficient": c}
            for i, c in enumerate(coeffs, start=1)] or [{"N": a.N, "k": a.k, "j": a.j,
                                                         "consistent": r.consistent}]
    return _Outcome(r.to_json(), rows, r.consistent)


def _cmd_ttilde(a) -> _Outcome:
    from .ttilde_numeric import TValueDisagreement, ttilde_double, ttilde_single

    try:
        v = ttilde_single(a.k1, a.tol) if a.k2 is None else ttilde_double(a.k1, a.k2, a.tol)
    except TValueDisagreement as e:
        print(str(e), file=sys.stderr)
        return _Outcome({"k1": a.k1, "k2": a.k2, "status": "fail", "error": str(e)},
                        [{"k1": a.k1, "k2": a.k2, "status": "fail"}], False)
    d = {"k1": a.k1, **({"k2": a.k2} if a.k2 is not None else {}), **v.to_json()}
    row = {"k1": a.k1, "k2": a.k2, "re": v.value.real, "im": v.value.imag,
           "est_error": v.est_error, "method": v.method}
    return _Outcome(d, [row])


def paper_suite(only: list[str] | None = None, paper_literal: bool = False):
    """Run the reproduction suite; returns a :class:`~eis4.suite.RunManifest`."""
    from .suite import run_suite
    return run_suite(only, paper_literal)


def _cmd_paper_suite(a) -> _Outcome:
    from .suite import select_claims

    try:
        select_claims(a.only)
    except KeyError as e:
        raise ValueError(e.args[0]) from None
    m = paper_suite(a.only, a.paper_literal)
    for r in m.results:
        print(f"{r.status.upper():4}  {r.claim:18} {r.wall_time:8.2f}s", file=sys.stderr)
    rows = [{"claim": r.claim, "group": r.group, "status": r.status} for r in m.results]
    return _Outcome(m.to_json(timings=a.timings), rows, m.status == "pass")


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _pos_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eis4", description="Level-4 double Eisenstein series toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.set_defaults(func=fn)
        return sp

    sp = add("qexp", _cmd_qexp, "print a truncated q-expansion")
    sp.add_argument("--series", choices=("H", "G", "H2"), required=True)
    sp.add_argument("--k", type=_pos_int, required=True)
    sp.add_argument("--k2", type=_pos_int)
    sp.add_argument("--terms", type=_pos_int)

    sp = add("verify", _cmd_verify, "check an exact series identity")
    sp.add_argument("--claim", choices=("shuffle", "g-decomp", "g-product", "im-vanish", "theta"), required=True)
    sp.add_argument("--k", type=_pos_int)
    sp.add_argument("--k1", type=_pos_int)
    sp.add_argument("--k2", type=_pos_int)
    sp.add_argument("--terms", type=_pos_int)

    sp = add("rank", _cmd_rank, "rank of M_k")
    sp.add_argument("--mk", type=_pos_int, required=True)

    sp = add("det", _cmd_det, "determinant and 2-adic valuation of the period matrix")
    sp.add_argument("--aw", type=_pos_int, required=True)

    sp = add("kernel", _cmd_kernel, "kernel of Delta~ on V_{k-2}")
    sp.add_argument("--delta-tilde", type=_pos_int, required=True)

    sp = add("relations", _cmd_relations, "relation vectors among double T-values")
    sp.add_argument("--k", type=_pos_int, required=True)
    sp.add_argument("--j", type=_pos_int)
    sp.add_argument("--paper-literal", action="store_true")

    for name, fn, help_ in (("conjecture", _cmd_conjecture, "period-polynomial vector"),
                            ("express", _cmd_express, "express a period-polynomial vector via relations")):
        sp = add(name, fn, help_)
        sp.add_argument("--N", type=int, choices=(2, 4), required=True)
        sp.add_argument("--k", type=_pos_int, required=True)
        sp.add_argument("--j", type=_pos_int, required=True)
        if name == "express":
            sp.add_argument("--paper-literal", action="store_true")

    sp = add("ttilde", _cmd_ttilde, "numerical T~ value")
    sp.add_argument("--k1", type=_pos_int, required=True)
    sp.add_argument("--k2", type=_pos_int)
    sp.add_argument("--tol", type=float, default=1e-8)

    sp = add("paper-suite", _cmd_paper_suite, "run the full reproduction suite")
    sp.add_argument("--only", nargs="+", metavar="ID", help="claim ids or group names")
    sp.add_argument("--paper-literal", action="store_true")
    sp.add_argument("--timings", action="store_true", help="include wall times in the manifest")
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        out = args.func(args)
    except (ValueError, KeyError) as e:
        print(f"eis4 {args.command}: {e}", file=sys.stderr)
        return 2
    _emit(out, args.format, stdout)
    return 0 if out.ok else 1


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
