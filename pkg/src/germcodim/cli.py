"""Command line interface: ``germcodim {check,aecodim,report,family,greuel}``.

Exit codes: 0 success, 1 input error, 2 ramification gate failure,
3 timeout.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from . import deadline
from .errors import GermcodimError, StageTimeout
from .germfile import load_germ
from .groebner import INFINITE
from .invariants import (Timings, corank, greuel_mu, mond_verdict, mu_image_family,
                         ramification, validate_germ)

EXIT_OK, EXIT_INPUT, EXIT_GATE, EXIT_TIMEOUT = 0, 1, 2, 3

NOTICE = "results are computed over F_{p}; no characteristic-0 claim is made"


def _count(x):
    return "INFINITE" if x == INFINITE else str(x)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# each worker returns (exit code, stdout text, stderr text)

def _run_check(path, args):
    try:
        gf = load_germ(path, args.char)
    except GermcodimError as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    g = gf.germ
    problems = validate_germ(g)
    cr = corank(g)
    ram = ramification(g)
    code = EXIT_INPUT if problems else (EXIT_OK if ram.gate else EXIT_GATE)
    if args.json:
        out = _dump({
            "germ": g.echo(),
            "characteristic": g.characteristic,
            "weighted_homogeneous": not problems,
            "violations": problems,
            "corank": cr,
            "ramification_dim": ram.dim,
            "ramification_codim": ram.codim,
            "gate": ram.gate,
        }) + "\n"
    else:
        lines = [f"germ: {path}",
                 f"characteristic: {g.characteristic} ({NOTICE.format(p=g.characteristic)})",
                 f"homogeneity: {'ok' if not problems else 'FAILED'}"]
        lines += [f"  - {p}" for p in problems]
        lines += [f"corank: {cr}",
                  f"ramification dim: {ram.dim}",
                  f"ramification codim: {ram.codim}",
                  f"gate (codim 2): {'PASS' if ram.gate else 'FAIL'}"]
        out = "\n".join(lines) + "\n"
    return code, out, ""


def _run_report(path, args, command):
    try:
        gf = load_germ(path, args.char)
    except GermcodimError as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    g = gf.germ
    problems = validate_germ(g)
    if problems:
        return EXIT_INPUT, "", "".join(f"error: {path}: {p}\n" for p in problems)
    mu = args.mu_image if getattr(args, "mu_image", None) is not None else gf.mu_image
    t = Timings()
    try:
        with deadline.time_limit(args.timeout or None):
            if command == "aecodim" and not args.force:
                ram = ramification(g)
                if not ram.gate:
                    return (EXIT_GATE, "",
                            f"error: {path}: ramification codimension {ram.codim} != 2; "
                            "the A_e-codimension is not certified (use --force for dim N_f)\n")
            rep = mond_verdict(g, mu, family_k=gf.family_k, force=args.force, timings=t)
    except StageTimeout as exc:
        return EXIT_TIMEOUT, "", f"timeout: {path}: {exc}\n"
    if args.json:
        return EXIT_OK, _dump(rep.to_json(timings=args.timings)) + "\n", ""
    label = "ae_codim" if rep.ae_codim_certified else "dim N_f (hypothesis unmet)"
    lines = [f"germ: {path}",
             f"characteristic: {g.characteristic} ({NOTICE.format(p=g.characteristic)})"]
    if command == "report":
        lines += [f"corank: {rep.corank}",
                  f"ramification dim: {rep.ramification_dim}",
                  f"gate (codim 2): {'PASS' if rep.gate else 'FAIL'}",
                  f"multiplicity: {_count(rep.multiplicity)}"]
    if rep.ae_codim is None:
        lines.append(f"{label}: unavailable")
    elif rep.ae_codim == INFINITE:
        lines.append(f"{label}: INFINITE (not finitely determined, N_f infinite-dimensional)")
    else:
        lines.append(f"{label}: {rep.ae_codim}")
    if rep.mu_image is not None:
        lines.append(f"mu_image: {rep.mu_image} ({rep.mu_source})")
    lines.append(f"verdict: {rep.verdict}")
    if args.timings:
        lines += [f"time {k}: {v} ms" for k, v in rep.timings_ms.items()]
    lines += [f"error: {e}" for e in rep.errors]
    return EXIT_OK, "\n".join(lines) + "\n", ""


def _worker(job):
    command, path, args = job
    if command == "check":
        return _run_check(path, args)
    return _run_report(path, args, command)


def _run_files(command, args) -> int:
    jobs = [(command, path, args) for path in args.files]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_worker, jobs))
    else:
        results = [_worker(j) for j in jobs]
    code = EXIT_OK
    for rc, out, err in results:
        sys.stdout.write(out)
        sys.stderr.write(err)
        code = max(code, rc)
    sys.stdout.flush()
    return code


def _add_common(sp, timeout=True):
    sp.add_argument("files", nargs="+", metavar="FILE", help="germ file(s)")
    sp.add_argument("--char", type=int, default=None, metavar="P",
                    help="override the characteristic given in the file")
    sp.add_argument("--json", action="store_true", help="emit JSON")
    sp.add_argument("--jobs", type=int, default=1, help="process files in parallel")
    if timeout:
        sp.add_argument("--timeout", type=float, default=0, metavar="SECONDS",
                        help="abort a germ after this many seconds (0: no limit)")
        sp.add_argument("--force", action="store_true",
                        help="run past a failed ramification gate (reports dim N_f)")
        sp.add_argument("--timings", action="store_true",
                        help="include per-stage timings (output is then not reproducible)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="germcodim",
        description="A_e-codimension and related invariants of weighted-homogeneous "
                    "map-germs (C^n,0) -> (C^{n+1},0).",
    )
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("check", help="corank, homogeneity and ramification gate"),
                timeout=False)
    _add_common(sub.add_parser("aecodim", help="A_e-codimension"))
    rp = sub.add_parser("report", help="all invariants and the mu_I verdict")
    _add_common(rp)
    rp.add_argument("--mu-image", type=int, default=None, help="image Milnor number to compare")
    fp = sub.add_parser("family", help="mu_I for weights (1,2,3), degrees (4,5,6,2k+1)")
    fp.add_argument("--k", type=int, required=True)
    gp = sub.add_parser("greuel", help="Milnor number tau - t + 1 of a space curve")
    gp.add_argument("--tau", type=int, required=True)
    gp.add_argument("--cmtype", type=int, required=True)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.INFO if args.verbose == 1 else logging.DEBUG,
                            format="%(asctime)s %(name)s %(message)s", stream=sys.stderr)
    if args.command == "family":
        try:
            print(mu_image_family(args.k))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        return EXIT_OK
    if args.command == "greuel":
        try:
            print(greuel_mu(args.tau, args.cmtype))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        return EXIT_OK
    if args.command == "check":
        return _run_files("check", args)
    if args.command == "aecodim":
        args.mu_image = None
    return _run_files(args.command, args)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
