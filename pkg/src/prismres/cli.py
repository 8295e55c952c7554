"""Command-line interface.

Subcommands:
    resistance N U V [--float]            closed-form prism resistance
    kirchhoff N [--method M] [--oracle-cap C]
    table N [--format csv|json] [--output PATH]
    verify [--n-max N] [--tol T]
    net {resistance,reduce,spantrees,kirchhoff} FILE ...

Results go to stdout and are byte-deterministic for fixed inputs; a trailing
"# command=... elapsed_ms=..." record goes to stderr so timing never perturbs
stdout.  Exit codes: 0 success, 1 honest negative (failed verification,
disconnected network), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .network import (
    DisconnectedNetworkError,
    Network,
    build_prism,
    kirchhoff_oracle,
    kron_reduce,
    matrix_tree_count,
    network_from_json,
    network_to_json,
    resistance_oracle,
)
from .prism import kirchhoff_closed, kirchhoff_float, prism_resistance, resistance_table
from .verify import run_checks

DEFAULT_ORACLE_CAP = 200
ORACLE_CAP_ENV = "PRISMRES_ORACLE_CAP"


def _fmt(value) -> str:
    """Deterministic scalar rendering: exact rationals as p/q, floats shortest."""
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


def _load_network(path: str) -> Network:
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc
    return network_from_json(doc)


# -- subcommand handlers ------------------------------------------------


def _cmd_resistance(args) -> int:
    mode = "float" if args.float else "exact"
    print(_fmt(prism_resistance(args.n, args.u, args.v, mode)))
    return 0


def _cmd_kirchhoff(args) -> int:
    if args.method == "closed":
        print(_fmt(kirchhoff_closed(args.n)))
    elif args.method == "oracle":
        cap = args.oracle_cap
        if cap is None:
            cap = int(os.environ.get(ORACLE_CAP_ENV, DEFAULT_ORACLE_CAP))
        if args.n > cap:
            raise ValueError(
                f"oracle method is capped at n={cap}; raise --oracle-cap or "
                f"${ORACLE_CAP_ENV} to go higher")
        print(_fmt(kirchhoff_oracle(build_prism(args.n).to_float())))
    else:
        print(_fmt(kirchhoff_float(args.n, args.method)))
    return 0


def _cmd_table(args) -> int:
    labels = [f"p{i}" for i in range(1, args.n + 1)] + [f"q{i}" for i in range(1, args.n + 1)]
    if args.format == "csv":
        rows = resistance_table(args.n, "float")
        lines = ["vertex," + ",".join(labels)]
        for label, row in zip(labels, rows):
            lines.append(label + "," + ",".join(f"{x:.17g}" for x in row))
        text = "\n".join(lines) + "\n"
    else:
        rows = resistance_table(args.n, "exact")
        doc = {
            "n": args.n,
            "vertices": labels,
            "resistances": [[str(x) for x in row] for row in rows],
        }
        text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    results = run_checks(n_max=args.n_max, tol=args.tol)
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.name}"
        if r.detail:
            line += f": {r.detail}"
        print(line)
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def _cmd_net(args) -> int:
    net = _load_network(args.file)
    if args.net_command == "resistance":
        print(_fmt(resistance_oracle(net, args.u, args.v)))
    elif args.net_command == "reduce":
        keep = [v.strip() for v in args.keep.split(",") if v.strip()]
        doc = network_to_json(kron_reduce(net, keep))
        text = json.dumps(doc, indent=2) + "\n"
        if args.output:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)
    elif args.net_command == "spantrees":
        count = matrix_tree_count(net)
        print(count if isinstance(count, int) else str(count))
    else:
        print(_fmt(kirchhoff_oracle(net)))
    return 0


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prismres",
        description="Exact and floating resistance analysis of prism networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resistance", help="closed-form resistance between two prism vertices")
    p.add_argument("n", type=int, help="prism size (number of rungs)")
    p.add_argument("u", help="first vertex label, e.g. p1")
    p.add_argument("v", help="second vertex label, e.g. q3")
    p.add_argument("--float", action="store_true", help="binary64 instead of exact rational")
    p.set_defaults(handler=_cmd_resistance)

    p = sub.add_parser("kirchhoff", help="Kirchhoff index of the n-prism")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("closed", "coth", "spectral", "oracle"),
                   default="closed")
    p.add_argument("--oracle-cap", type=int, default=None,
                   help=f"size cap for --method oracle (default ${ORACLE_CAP_ENV} "
                        f"or {DEFAULT_ORACLE_CAP})")
    p.set_defaults(handler=_cmd_kirchhoff)

    p = sub.add_parser("table", help="all-pairs resistance table")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv",
                   help="csv: float, 17 significant digits; json: exact rationals")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("verify", help="cross-validate closed forms against the oracle")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("net", help="operations on a network JSON file")
    netsub = p.add_subparsers(dest="net_command", required=True)

    q = netsub.add_parser("resistance", help="effective resistance between two vertices")
    q.add_argument("file")
    q.add_argument("u")
    q.add_argument("v")
    q.set_defaults(handler=_cmd_net)

    q = netsub.add_parser("reduce", help="Kron reduction onto a terminal set")
    q.add_argument("file")
    q.add_argument("--keep", required=True, help="comma-separated vertex labels")
    q.add_argument("--output", help="write the reduced network to a file")
    q.set_defaults(handler=_cmd_net)

    q = netsub.add_parser("spantrees", help="spanning-tree count (exact networks only)")
    q.add_argument("file")
    q.set_defaults(handler=_cmd_net)

    q = netsub.add_parser("kirchhoff", help="sum of all pairwise resistances")
    q.add_argument("file")
    q.set_defaults(handler=_cmd_net)

    return parser


def main(argv=None) -> int:
    """Parse and run; returns the exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        return args.handler(args)
    except DisconnectedNetworkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    finally:
        elapsed = (time.perf_counter() - start) * 1000.0
        print(f"# command={args.command} elapsed_ms={elapsed:.3f}", file=sys.stderr)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
