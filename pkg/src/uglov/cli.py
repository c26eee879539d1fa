"""Command-line front end.

Subcommands: enumerate (listing / DOT export), verify (exhaustive sweeps,
exit 1 on any counterexample), show (nature tables, boundary sequences,
admissible sequences, charge-change images).

Bipartitions use the dotted notation on the command line: components are
comma-separated, parts dot-separated, "-" is the empty component, e.g.
"6.1,2.2".  e = infinity is spelled "inf".
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import admissible, crystal, diagrams, isomorphism
from .crystal import CrystalParams
from .diagrams import format_bipartition, parse_bipartition


def parse_e(text: str):
    if text == "inf":
        return None
    e = int(text)
    if e < 2:
        raise argparse.ArgumentTypeError("e must be >= 2 or 'inf'")
    return e


def parse_charge(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("charge must be 's1,s2'")
    return (int(parts[0]), int(parts[1]))


def parse_window(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("window must be 'lo,hi'")
    return (int(parts[0]), int(parts[1]))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uglov",
        description="Level-two Fock-space crystal combinatorics.")
    parser.add_argument("--e", type=parse_e, default=3,
                        help="quantum characteristic, >= 2 or 'inf'")
    parser.add_argument("--charge", type=parse_charge, default=(0, 1),
                        metavar="S1,S2")
    parser.add_argument("--format", choices=("text", "json", "dot"),
                        default="text")
    parser.add_argument("--workers", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate",
                            help="list the crystal component up to rank n")
    p_enum.add_argument("--n", type=int, required=True)

    p_verify = sub.add_parser("verify", help="run an exhaustive sweep")
    p_verify.add_argument("--mode", required=True, choices=(
        "forward", "converse", "corollary", "propb", "psi-nature"))
    p_verify.add_argument("--n", type=int, required=True)

    p_show = sub.add_parser("show", help="render data for one bipartition")
    p_show.add_argument("bp", type=parse_bipartition)
    p_show.add_argument("what",
                        help="natures | boundary | adm | psi:S1,S2")
    p_show.add_argument("--window", type=parse_window, default=None,
                        metavar="LO,HI")
    return parser


def default_window(bp, charge) -> tuple[int, int]:
    n = bp.rank
    return (min(charge) - n - 1, max(charge) + n + 1)


def cmd_enumerate(args) -> int:
    p = CrystalParams(args.e, args.charge)
    layers = crystal.uglov_layers(args.n, p)
    if args.format == "dot":
        print(render_dot(args.n, p))
        return 0
    bps = sorted(layers[args.n])
    if args.format == "json":
        print(json.dumps([diagrams.bipartition_to_json(bp) for bp in bps]))
    else:
        for bp in bps:
            print(format_bipartition(bp))
        print("count: %d" % len(bps))
    return 0


def render_dot(n: int, p: CrystalParams) -> str:
    lines = ["digraph crystal {"]
    seen = set()
    for layer in crystal.uglov_layers(n, p):
        for bp in sorted(layer):
            seen.add(bp)
    for bp in sorted(seen):
        lines.append('  "%s";' % format_bipartition(bp))
    for src, j, dst in sorted(crystal.crystal_edges(n, p)):
        lines.append('  "%s" -> "%s" [label="%s"];'
                     % (format_bipartition(src), format_bipartition(dst), j))
    lines.append("}")
    return "\n".join(lines)


def _forward_one(task):
    bp, e, charge = task
    return admissible.verify_djm_forward(bp, CrystalParams(e, charge))


def _corollary_one(task):
    bp, e, charge = task
    return admissible.verify_djm_corollary(bp, CrystalParams(e, charge))


def _propb_one(task):
    bp, e, charge = task
    return admissible.propb_checks(bp, CrystalParams(e, charge))


_SWEEP_FUNCS = {"forward": _forward_one, "corollary": _corollary_one,
                "propb": _propb_one}


def cmd_verify(args) -> int:
    p = CrystalParams(args.e, args.charge)
    reports = []
    if args.mode == "converse":
        if args.e is None:
            print("converse mode needs finite e", file=sys.stderr)
            return 2
        for n in range(args.n + 1):
            reports.append(admissible.verify_djm_converse(n, p))
    elif args.mode == "psi-nature":
        if args.e is None:
            print("psi-nature mode needs finite e", file=sys.stderr)
            return 2
        target = (args.charge[1], args.charge[0])
        for layer in crystal.uglov_layers(args.n, p):
            for bp in sorted(layer):
                image = isomorphism.psi_to(bp, args.charge, target, args.e)
                ok = isomorphism.psi_nature_check(bp, image, args.charge,
                                                  target, p)
                reports.append({"bp": diagrams.bipartition_to_json(bp),
                                "image": diagrams.bipartition_to_json(image),
                                "pass": ok})
    else:
        func = _SWEEP_FUNCS[args.mode]
        tasks = [(bp, args.e, args.charge)
                 for layer in crystal.uglov_layers(args.n, p)
                 for bp in sorted(layer)]
        if args.workers > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                reports = list(pool.map(func, tasks))
        else:
            reports = [func(t) for t in tasks]
    reports.sort(key=lambda r: json.dumps(r, sort_keys=True))
    failed = [r for r in reports if not r["pass"]]
    if args.format == "json":
        for r in reports:
            print(json.dumps(r, sort_keys=True))
    else:
        print("checked %d instances, %d counterexamples"
              % (len(reports), len(failed)))
        for r in failed:
            print(json.dumps(r, sort_keys=True))
    return 1 if failed else 0


def cmd_show(args) -> int:
    bp, charge = args.bp, args.charge
    p = CrystalParams(args.e, charge)
    window = args.window or default_window(bp, charge)
    if args.what == "natures":
        table = diagrams.nature_table(bp, charge, window)
        if args.format == "json":
            print(json.dumps([
                {"content": j, "component": c, "kind": ent.kind,
                 "node": list(ent.node), "virtual": ent.virtual}
                for j, c, ent in table]))
        else:
            print(diagrams.render_nature_table(
                {format_bipartition(bp): table}))
    elif args.what == "boundary":
        seq = diagrams.boundary_sequence(bp, charge, window)
        if args.format == "json":
            print(json.dumps([list(g) for g in seq]))
        else:
            print(" ".join("(%d,%d,%d)" % g for g in seq))
    elif args.what == "adm":
        try:
            seq = admissible.adm(bp, p)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        if args.format == "json":
            print(json.dumps(seq))
        else:
            print(",".join(str(j) for j in seq))
    elif args.what.startswith("psi:"):
        target = parse_charge(args.what[len("psi:"):])
        try:
            image = isomorphism.psi_to(bp, charge, target, args.e)
        except ValueError as exc:
            print("error: %s" % exc, file=sys.stderr)
            return 1
        if args.format == "json":
            print(json.dumps(diagrams.bipartition_to_json(image)))
        else:
            print(format_bipartition(image))
    else:
        print("unknown rendering %r" % (args.what,), file=sys.stderr)
        return 2
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_show(args)


if __name__ == "__main__":
    sys.exit(main())
