"""Command-line entry point: ``twoonemaps <subcommand> ...``.

Exit status is 0 on success, 2 for invalid input and 1 when a computation
fails (no solutions found, I/O error, singular normalization).
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import arith, belyi, genfun, maps, render
from .passport import Passport


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


class _Usage(Exception):
    pass


def _passport(text: str) -> Passport:
    try:
        return Passport.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _viewport(text: str) -> tuple[float, float, float, float]:
    try:
        cx, cy, w, h = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected cx,cy,w,h") from None
    return cx, cy, w, h


def _size(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected WxH") from None
    if w < 1 or h < 1:
        raise argparse.ArgumentTypeError("image size must be positive")
    return w, h


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def cmd_count(args, out) -> None:
    for p, n in genfun.count_slice(args.edges).items():
        out.write(f"{p}: {n}\n")


def cmd_trees(args, out) -> None:
    p = args.passport
    found = [(t, a) for t, a in maps.enumerate_plane_trees(p.edges, args.max_edges) if t.passport() == p]
    weighted = sum((Fraction(1, a) for _, a in found), Fraction(0))
    out.write(f"passport: {p}\n")
    out.write(f"trees: {len(found)}\n")
    out.write(f"weighted: {_fmt(weighted)}\n")
    out.write(f"formula: {_fmt(maps.weighted_tree_count(p))}\n")
    out.write("aut orders: " + " ".join(str(a) for _, a in found) + "\n")


def cmd_enumerate(args, out) -> None:
    if args.passport is not None:
        found = maps.maps_with_passport(args.passport, args.max_edges)
    else:
        found = maps.enumerate_21maps(args.edges, args.max_edges)
    out.write("\n\n".join(m.to_text() for m in found))
    if found:
        out.write("\n")


def cmd_analyze(args, out) -> None:
    out.write(arith.analyze_report(args.passport, args.emax))


def cmd_newton(args, out) -> None:
    poly = arith.newton_polygon(args.coeffs, args.prime)
    for slope, length in poly.segments:
        out.write(f"segment: slope {_fmt(Fraction(slope))} length {length}\n")
    out.write("valuations: " + arith.format_valuations(arith.root_valuations(args.coeffs, args.prime)) + "\n")


def cmd_solve(args, out) -> None:
    models = belyi.solve_canonical(args.passport, args.starts, args.tol, args.seed)
    out.write("\n\n".join(f"# solution {i}\n{m.to_text()}" for i, m in enumerate(models)) + "\n")


def cmd_render(args, out) -> None:
    models = belyi.solve_canonical(args.passport, args.starts, args.tol, args.seed)
    if not 0 <= args.solution < len(models):
        raise ValueError(f"solution index {args.solution} out of range (found {len(models)})")
    m = models[args.solution]
    if args.model == "normalized":
        m = belyi.to_normalized(m)
    px, py = args.size
    if args.viewport is None:
        view = render.default_viewport(m, px, py)
    else:
        cx, cy, w, h = args.viewport
        view = render.Viewport(complex(cx, cy), w, h, px, py)
    img = render.render(m, view, render.ColorRule(), args.r0, args.escape, args.max_iter, args.workers)
    render.write_ppm(img, args.out)
    out.write(f"wrote {args.out} ({px}x{py})\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twoonemaps", description="Counting, arithmetic and Belyi models of 2^1-maps.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="passport counts of 2^1-maps from the generating function")
    p.add_argument("--edges", type=_positive_int, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("trees", help="plane trees with a passport and their automorphism orders")
    p.add_argument("--passport", type=_passport, required=True)
    p.add_argument("--max-edges", type=int, default=maps.DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("enumerate", help="list 2^1-maps as rotation systems")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--passport", type=_passport)
    g.add_argument("--edges", type=int)
    p.add_argument("--max-edges", type=int, default=maps.DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("analyze", help="s-invariant, admissible ramification and orbit decompositions")
    p.add_argument("--passport", type=_passport, required=True)
    p.add_argument("--emax", type=_positive_int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("newton", help="Newton polygon and root valuations of an integer polynomial")
    p.add_argument("--coeffs", type=_int_list, required=True, help="c0,c1,... lowest degree first")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_newton)

    def solver_flags(p):
        p.add_argument("--passport", type=_passport, required=True)
        p.add_argument("--starts", type=_positive_int, default=200)
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("solve", help="canonical Belyi models by damped Newton")
    solver_flags(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("render", help="attraction-time picture of a model as PPM")
    solver_flags(p)
    p.add_argument("--solution", type=int, default=0)
    p.add_argument("--model", choices=("canonical", "normalized"), default="canonical")
    p.add_argument("--viewport", type=_viewport)
    p.add_argument("--size", type=_size, default=(600, 400))
    p.add_argument("--r0", type=float, default=0.05)
    p.add_argument("--escape", type=float, default=1e3)
    p.add_argument("--max-iter", type=_positive_int, default=512)
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "max_edges", None) is not None and args.max_edges < 0:
            raise ValueError("--max-edges must be non-negative")
        args.func(args, out)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
