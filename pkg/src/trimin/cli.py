"""Command-line entry point: ``trimin <verb> [options]``.

Machine output goes to stdout, diagnostics to stderr.  Exit status is 0 on
success, 1 on a domain error or a failed verification, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from math import comb

from . import __version__
from .analyze import max_cut_partition
from .curves import curves_csv, sample_curves
from .errors import PartitionError, TriminError
from .extremal import build_h_star, extremal_profile
from .families import FamilyId, enumerate_family, family_membership
from .generate import default_jobs
from .graph6 import encode, read_lines
from .oracle import g3_bruteforce, read_resume
from .symmetrise import symmetrise_h0
from .verify import (
    conjecture_suite,
    identities_suite,
    kpartite_suite,
    sandwich_suite,
    slopes_suite,
)


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_profile(args) -> int:
    if args.all_e:
        rows = [extremal_profile(args.n, e) for e in range(comb(args.n, 2) + 1)]
    elif args.e is None:
        raise TriminError("profile needs --e or --all-e")
    else:
        rows = [extremal_profile(args.n, args.e)]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["n", "e", "k", "a_star", "m_star", "h_star"])
        for p in rows:
            w.writerow([p.n, p.e, p.k, " ".join(map(str, p.a_star)), p.m_star, p.h_star])
    elif args.all_e:
        _out(json.dumps([p.to_dict() for p in rows]))
    else:
        _out(rows[0].to_json())
    return 0


def cmd_construct(args) -> int:
    _out(encode(build_h_star(args.n, args.e)))
    return 0


def cmd_families(args) -> int:
    for form in enumerate_family(args.n, args.e, FamilyId.parse(args.family)):
        _out(form.graph6())
    return 0


def cmd_member(args) -> int:
    fam = FamilyId.parse(args.family)
    for g in read_lines(sys.stdin):
        res = family_membership(g, fam, args.e)
        _out(json.dumps(res.to_dict()))
    return 0


def cmd_curves(args) -> int:
    pts = sample_curves(args.lo, args.hi, args.steps)
    if args.format == "csv":
        sys.stdout.write(curves_csv(pts))
    else:
        _out(json.dumps([{"lambda": p.lam, "g3": p.g3, "goodman": p.goodman, "kk": p.kk,
                          "bollobas": p.bollobas} for p in pts]))
    return 0


def cmd_oracle(args) -> int:
    n = args.n
    cells = [args.e] if args.e is not None else list(range(comb(n, 2) + 1))
    done = read_resume(args.resume) if args.resume else set()
    for e in cells:
        if (n, e) in done:
            print(f"skipping completed cell n={n} e={e}", file=sys.stderr)
            continue
        res = g3_bruteforce(n, e, allow_long=args.allow_long, jobs=args.jobs)
        _out(res.to_json_line(args.all_extremal))
        sys.stdout.flush()
        if args.resume:
            with open(args.resume, "a", encoding="ascii") as fh:
                fh.write(f"{n},{e}\n")
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    if suite == "conjecture":
        rep = conjecture_suite(args.n_max, all_e=args.all_e)
    elif suite == "slopes":
        rep = slopes_suite(args.n_min, args.n_max)
    elif suite == "sandwich":
        rep = sandwich_suite(args.n_max)
    elif suite == "identities":
        rep = identities_suite(args.n_max, samples=args.samples, seed=args.seed)
    else:
        rep = kpartite_suite(args.n_max)
    for line in rep.notes + rep.failures:
        print(line, file=sys.stderr)
    _out(rep.summary())
    return 0 if rep.ok else 1


def cmd_analyze(args) -> int:
    mode = "exact" if args.exact else "heuristic"
    for g in read_lines(sys.stdin):
        res = max_cut_partition(g, args.k, mode=mode, z_threshold=args.z_threshold, seed=args.seed)
        _out(res.to_json())
    return 0


def cmd_symmetrise(args) -> int:
    try:
        with open(args.partition, encoding="utf-8") as fh:
            partition = json.load(fh)
    except (OSError, ValueError) as exc:
        raise PartitionError(f"cannot read partition file {args.partition}: {exc}") from None
    if not (isinstance(partition, list) and all(isinstance(p, list) for p in partition)):
        raise PartitionError("partition file must hold a JSON list of vertex lists")
    graphs = list(read_lines(sys.stdin))
    if len(graphs) != 1:
        raise TriminError(f"symmetrise reads exactly one graph6 line, got {len(graphs)}")
    _out(encode(symmetrise_h0(graphs[0], partition)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trimin", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("profile", help="extremal profile (k, a*, m*, h*)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--all-e", action="store_true", help="every e from 0 to C(n,2)")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("construct", help="graph6 of the conjectured minimiser H*(n,e)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    fams = [f.value for f in FamilyId]
    p = sub.add_parser("families", help="enumerate a family as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--family", choices=fams, required=True)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("member", help="family membership of graph6 lines on stdin")
    p.add_argument("--family", choices=fams, required=True)
    p.add_argument("--e", type=int, help="expected edge count (defaults to the graph's)")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("curves", help="sample the bound curves")
    p.add_argument("--lo", type=float, default=0.0)
    p.add_argument("--hi", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=1001, help="number of sample points")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("oracle", help="exhaustive minimum as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int)
    p.add_argument("--all-extremal", action="store_true",
                   help="list every extremal class, not just the first")
    p.add_argument("--jobs", type=int, default=default_jobs(),
                   help="worker processes (default from TRIMIN_JOBS, else 1)")
    p.add_argument("--resume", metavar="FILE", help="file of completed 'n,e' cells")
    p.add_argument("--allow-long", action="store_true", help="permit n = 10")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("--suite", required=True,
                   choices=["conjecture", "slopes", "sandwich", "identities", "kpartite"])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=20, help="first order for the slopes suite")
    p.add_argument("--all-e", action="store_true",
                   help="conjecture suite: every e >= 1, not only e > n^2/4")
    p.add_argument("--samples", type=int, default=10_000, help="random graphs (identities)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="max-cut partition diagnostics for graph6 on stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="exact branch and bound")
    p.add_argument("--z-threshold", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("symmetrise", help="reshape an H0 member (graph6 on stdin)")
    p.add_argument("--partition", required=True, metavar="FILE",
                   help="JSON list of parts witnessing H0 membership")
    p.set_defaults(func=cmd_symmetrise)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TriminError as exc:
        print(f"trimin {args.verb}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
