"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed input or flags.
"""

from __future__ import annotations

import argparse
import sys

from . import bijection, crystal, energy, rigged, tensor, verify
from .cartan import feasible_weights, format_weight, is_dominant, parse_weight


def _weights_with_paths(length: int):
    return tensor.enumerate_all_hw(length)


def cmd_graph(args) -> int:
    if args.action == "dump":
        for src, color, dst in sorted(crystal.EDGES):
            print(f"{src} {color} {dst}")
        return 0
    bad = crystal.verify_graph_lemma()
    print(f"vertices=27 edges={len(crystal.EDGES)} counterexamples={len(bad)}")
    for line in bad:
        print(line)
    return 1 if bad else 0


def cmd_paths(args) -> int:
    if args.weight is not None:
        for p in tensor.enumerate_paths(args.weight, args.length):
            print(tensor.format_path(p))
        return 0
    for lam, paths in _weights_with_paths(args.length).items():
        print(f"weight {format_weight(lam)}")
        for p in paths:
            print(tensor.format_path(p))
    return 0


def cmd_rcs(args) -> int:
    weights = ([args.weight] if args.weight is not None
               else feasible_weights(args.length))
    first = True
    for lam in weights:
        rcs = rigged.enumerate_rcs(lam, args.length)
        if args.weight is None:
            if not first:
                print()
            print(f"weight {format_weight(lam)}")
            first = False
        for rc in rcs:
            print(rc.to_text(), end="")
            print()
    return 0


def cmd_x(args) -> int:
    if args.weight is not None:
        print(energy.one_dim_sum(args.weight, args.length))
        return 0
    for lam, paths in _weights_with_paths(args.length).items():
        print(f"{format_weight(lam)} {energy.one_dim_sum(lam, args.length)}")
    return 0


def cmd_m(args) -> int:
    if args.weight is not None:
        print(rigged.fermionic_M(args.weight, args.length))
        return 0
    for lam in feasible_weights(args.length):
        poly = rigged.fermionic_M(lam, args.length)
        if poly:
            print(f"{format_weight(lam)} {poly}")
    return 0


def cmd_phi(args) -> int:
    try:
        text = open(args.rc).read()
        rc = rigged.RiggedConfiguration.from_text(text)
        rc.check()
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    path = bijection.phi(rc)
    c = rigged.cc(rc)
    d = energy.energy_D(path)
    print(tensor.format_path(path))
    print(f"c={c} D={d}")
    return 0 if c == d else 1


def cmd_phi_inv(args) -> int:
    try:
        line = open(args.path).read()
        path = tensor.parse_path(line)
        rc = bijection.phi_inv(path)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    c = rigged.cc(rc)
    d = energy.energy_D(path)
    print(rc.to_text(), end="")
    print(f"c={c} D={d}")
    return 0 if c == d else 1


def cmd_verify(args) -> int:
    report = verify.verify(args.max_length, jobs=args.jobs, log=print)
    return 0 if report.failures == 0 else 1


def _add_weight_flag(sub, required=False):
    sub.add_argument("--weight", type=parse_weight, required=required,
                     metavar="W", help="six comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e6rigged",
        description="rigged configurations, restricted paths and their bijection "
                    "for tensor powers of the 27-vertex crystal")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("graph", help="dump or verify the crystal graph")
    p.add_argument("action", choices=("dump", "verify"))
    p.set_defaults(func=cmd_graph)

    for name, func, extra in (
            ("paths", cmd_paths, "enumerate classically restricted paths"),
            ("rcs", cmd_rcs, "enumerate rigged configurations"),
            ("x", cmd_x, "print the path generating polynomial X"),
            ("m", cmd_m, "print the fermionic polynomial M")):
        p = subs.add_parser(name, help=extra)
        p.add_argument("--length", type=int, required=True, metavar="L")
        _add_weight_flag(p)
        p.set_defaults(func=func)

    p = subs.add_parser("phi", help="map a rigged configuration file to its path")
    p.add_argument("--rc", required=True, metavar="FILE")
    p.set_defaults(func=cmd_phi)

    p = subs.add_parser("phi-inv", help="map a path file to its rigged configuration")
    p.add_argument("--path", required=True, metavar="FILE")
    p.set_defaults(func=cmd_phi_inv)

    p = subs.add_parser("verify", help="run the exhaustive X=M and bijection harness")
    p.add_argument("--max-length", type=int, required=True, metavar="N")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    if getattr(args, "length", 0) and args.length < 0:
        print("error: --length must be >= 0", file=sys.stderr)
        return 2
    if getattr(args, "weight", None) is not None and not is_dominant(args.weight):
        print("error: weight must be dominant", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
