"""Batch driver: classification scans, verification suites, branching reports.

Exit codes: 0 all checks pass, 1 a mathematical identity failed, 2 usage
error.  Output is deterministic byte for byte for a fixed configuration:
bases are RREF-canonical and rows are sorted after any parallel merge.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .branch import verify_branching
from .engine import (
    classify_gl_cell,
    classify_gl_cells,
    classify_ido_cell,
    classify_ido_cells,
    classify_sl_cell,
    classify_sl_cells,
)
from .operators import (
    build_sbo,
    check_equivariance,
    fg_submodule,
    image_computations,
    verify_factorization_sbo,
)
from .params import parse_sign
from .rep import ScalarRepParams, TargetRepParams
from .verma import classify_homs, verify_factorization_verma

TABLE_COLUMNS = [
    "flavor",
    "n",
    "alpha",
    "beta",
    "l",
    "lambda",
    "nu",
    "predicted_dim",
    "computed_dim",
    "basis_symbols",
]


def _parse_fractions(text):
    return tuple(Fraction(x) for x in text.split(",") if x.strip())


def _cell_worker(job):
    kind, n, cell, flavor = job
    if kind == "sl":
        return classify_sl_cell(n, cell)
    if kind == "gl":
        return classify_gl_cell(n, cell)
    return classify_ido_cell(n, cell, flavor)


def _run_cells(jobs, workers):
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_cell_worker, jobs))
    return [_cell_worker(j) for j in jobs]


def _emit(rows_or_report, fmt, out_path, columns=None):
    if fmt == "json":
        text = json.dumps(rows_or_report, indent=2, default=str) + "\n"
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows_or_report:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        widths = {
            c: max([len(c)] + [len(str(r.get(c, ""))) for r in rows_or_report])
            for c in columns
        }
        lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
        for row in rows_or_report:
            lines.append("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in columns))
        text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _default_out(path):
    if path is None:
        return None
    base = os.environ.get("FMETHOD_OUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def cmd_classify(args) -> int:
    n = args.n
    samples = _parse_fractions(args.lambda_samples)
    if args.homs:
        rows = classify_homs(
            n, connected=args.connected, m_max=args.m_max, l_max=args.l_max,
            s_samples=samples,
        )
        columns = [
            "flavor", "n", "alpha", "beta", "l", "s", "r",
            "predicted_dim", "computed_dim", "basis_symbols",
        ]
    else:
        jobs = []
        if args.ido:
            cells = classify_ido_cells(
                n, args.k_max, samples, args.flavor,
                _parse_fractions(args.lambda2_samples) if args.flavor == "gl" else (None,),
            )
            jobs = [("ido", n, c, args.flavor) for c in cells]
        elif args.flavor == "sl":
            jobs = [("sl", n, c, "sl") for c in classify_sl_cells(n, args.m_max, args.l_max, samples)]
        else:
            cells = classify_gl_cells(
                n, args.m_max, args.l_max, samples, _parse_fractions(args.lambda2_samples)
            )
            jobs = [("gl", n, c, "gl") for c in cells]
        rows = _run_cells(jobs, args.jobs)
        rows.sort(
            key=lambda r: (r["flavor"], r["n"], r["l"], r["lambda"], r["nu"], r["alpha"], r["beta"])
        )
        columns = TABLE_COLUMNS
    _emit(rows, args.format, _default_out(args.out), columns)
    bad = [r for r in rows if not r["ok"]]
    if bad:
        sys.stderr.write(f"{len(bad)} cells disagree with the predicted dimensions\n")
        for r in bad[:10]:
            sys.stderr.write(json.dumps(r, default=str) + "\n")
        return 1
    return 0


def _verify_equivariance(args) -> dict:
    n, m, ell = args.n, args.m, args.l
    lam = Fraction(args.lam)
    alpha = parse_sign(args.alpha)
    if args.flavor == "sl":
        nu = lam + m + Fraction(n, n - 1) * ell
        source = ScalarRepParams.sl(n, lam, alpha)
        target = TargetRepParams.sl(n, nu if args.nu is None else Fraction(args.nu), ell=ell)
    else:
        lam2 = Fraction(args.lam2)
        nu = lam + m + Fraction(n, n - 1) * ell
        nu2 = lam2 - Fraction(ell, n - 1)
        source = ScalarRepParams.gl(n, lam, lam2, alpha, 0)
        target = TargetRepParams.gl(
            n, nu if args.nu is None else Fraction(args.nu), nu2, ell=ell
        )
    return check_equivariance(build_sbo(m, ell, n), source, target, args.deg)


def cmd_verify(args) -> int:
    if args.what == "factorization":
        report = verify_factorization_sbo(args.m, args.l, args.n, args.deg)
    elif args.what == "equivariance":
        report = _verify_equivariance(args)
    elif args.what == "images":
        report = image_computations(args.m, args.l, args.n)
        stability = fg_submodule(args.m + args.l, args.n)
        report["fg_stability"] = stability["status"]
        if stability["status"] != "pass":
            report["status"] = "fail"
    elif args.what == "verma-factorization":
        report = verify_factorization_verma(
            args.m, args.l, args.n, args.deg, flavor=args.flavor,
            lam2=Fraction(args.lam2),
        )
    else:
        raise ValueError(f"unknown verify target {args.what!r}")
    text = json.dumps(report, indent=2, default=str) + "\n"
    out = _default_out(args.out)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["status"] == "pass" else 1


def cmd_branch(args) -> int:
    if args.s is None and args.p is None:
        sys.stderr.write("branch needs --s or --p\n")
        return 2
    report = verify_branching(
        args.n,
        s=Fraction(args.s) if args.s is not None else None,
        p=args.p,
        D=args.deg,
    )
    text = json.dumps(report, indent=2, default=str) + "\n"
    out = _default_out(args.out)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["status"] == "pass" else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="fmethod",
        description="Exact classification and verification of differential "
        "symmetry breaking operators on real projective spaces.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="run a classification scan")
    c.add_argument("--flavor", choices=["sl", "gl"], default="sl")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--m-max", type=int, default=3)
    c.add_argument("--l-max", type=int, default=3)
    c.add_argument("--k-max", type=int, default=4)
    c.add_argument("--lambda-samples", default="1/3,5,-7/2")
    c.add_argument("--lambda2-samples", default="0,1/2")
    c.add_argument("--ido", action="store_true", help="scan intertwining operators (full nilradical)")
    c.add_argument("--homs", action="store_true", help="scan Verma-module homomorphisms")
    c.add_argument("--connected", action="store_true", help="identity-component equivariance only")
    c.add_argument("--format", choices=["json", "csv", "table"], default="table")
    c.add_argument("--out", default=None)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="verify operator identities")
    v.add_argument("what", choices=["factorization", "equivariance", "images", "verma-factorization"])
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--m", type=int, default=1)
    v.add_argument("--l", type=int, default=0)
    v.add_argument("--deg", type=int, default=6)
    v.add_argument("--lambda", dest="lam", default="0")
    v.add_argument("--lambda2", dest="lam2", default="0")
    v.add_argument("--nu", default=None)
    v.add_argument("--alpha", default="+")
    v.add_argument("--flavor", choices=["sl", "gl"], default="sl")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("branch", help="verify branching laws")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--s", default=None)
    b.add_argument("--p", type=int, default=None)
    b.add_argument("--deg", type=int, default=10)
    b.add_argument("--out", default=None)
    b.set_defaults(func=cmd_branch)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
