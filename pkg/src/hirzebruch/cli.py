"""Command-line front end."""
from __future__ import annotations

import argparse
import json
import sys

from .errors import GermError
from .germ import Germ
from .normalization import normalization_plumbing
from .plumbing import milnor_boundary_plumbing, to_dot, to_json
from .report import SECTIONS, report_json, report_text
from .sweep import CHECKS, run_sweep

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID_GERM = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="hirzebruch",
        description="Topology of the Milnor-fiber boundary of z^m - x^k y^l = 0.",
    )
    p.add_argument("--m", type=int, help="exponent of z (>= 2)")
    p.add_argument("--k", type=int, help="exponent of x (>= 1)")
    p.add_argument("--l", type=int, help="exponent of y (>= k unless --allow-unordered)")
    p.add_argument("--allow-unordered", action="store_true", help="permit k > l")
    p.add_argument("--what", choices=SECTIONS + ("all",), default="all")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--sweep", type=int, metavar="N", help="check every valid germ with m, k, l <= N")
    p.add_argument("--check", choices=tuple(CHECKS) + ("all",), default="all")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    return p


def _render(args) -> str:
    g = Germ(args.m, args.k, args.l, allow_unordered=args.allow_unordered)
    sections = SECTIONS if args.what == "all" else (args.what,)
    if args.format == "dot":
        if args.what == "plumbing":
            return to_dot(milnor_boundary_plumbing(g), name="L")
        return to_dot(normalization_plumbing(g), name="L_normalization")
    if args.format == "json":
        if args.what in ("plumbing", "normalization"):
            doc = report_json(g, sections)
            graph = milnor_boundary_plumbing(g) if args.what == "plumbing" else normalization_plumbing(g)
            doc["graph"] = json.loads(to_json(graph))
            return json.dumps(doc, indent=2) + "\n"
        return json.dumps(report_json(g, sections), indent=2) + "\n"
    return report_text(g, sections)


def _render_sweep(args) -> tuple[str, bool]:
    res = run_sweep(args.sweep, args.check)
    lines = [f"sweep over {res.germs} germs with m, k, l <= {args.sweep}"]
    for name, n in res.passed.items():
        status = "PASS" if n == res.germs else "FAIL"
        lines.append(f"  {status} {name}: {n}/{res.germs}")
    lines += ["  " + f for f in res.failures]
    return "\n".join(lines) + "\n", res.ok


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.sweep is not None:
        if args.sweep < 2:
            parser.error("--sweep needs a bound >= 2")
        text, ok = _render_sweep(args)
        status = EXIT_OK if ok else EXIT_FAILED
    else:
        if None in (args.m, args.k, args.l):
            parser.error("--m, --k and --l are required unless --sweep is given")
        if args.format == "dot" and args.what not in ("plumbing", "normalization"):
            parser.error("--format dot needs --what plumbing or --what normalization")
        try:
            text = _render(args)
        except GermError as exc:
            print(f"invalid germ: {exc}", file=sys.stderr)
            return EXIT_INVALID_GERM
        status = EXIT_OK
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
