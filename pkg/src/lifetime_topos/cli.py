"""Command-line entry point.

Exit codes: 0 success, 1 validation/domain error, 2 law-check
counterexample, 3 parse/usage error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import expr, laws
from .algebra import AlgebraError, Bounds, format_lifetime, parse_rational
from .homology import (
    Field,
    HomologyError,
    betti_curve,
    diagram,
    pairs_to_csv,
    persistence_pairs,
)
from .sheaf import CoverParseError, GluingError, glue, incompatible_pair, parse_cover, restrict
from .svg import barcode_svg, diagram_svg
from .varcomplex import (
    ComplexParseError,
    ComplexValidationError,
    format_complex,
    parse_complex,
)

EXIT_OK, EXIT_INVALID, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bounds(values) -> Bounds:
    try:
        return Bounds(parse_rational(values[0]), parse_rational(values[1]))
    except (ValueError, AlgebraError) as exc:
        raise UsageError(f"bad --bounds: {exc}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_algebra_eval(args) -> int:
    value = expr.evaluate(args.expression, _bounds(args.bounds))
    print(expr.render(value, args.decimals))
    return EXIT_OK


def cmd_algebra_laws(args) -> int:
    if args.samples <= 0:
        raise UsageError("--samples must be positive")
    results = laws.run_all(args.samples, args.seed, _bounds(args.bounds))
    status = EXIT_OK
    for r in results:
        line = f"{r.name}: {r.passed}/{r.total} passed"
        if not r.ok:
            line += f"; counterexample: {r.describe_counterexample()}"
            status = EXIT_COUNTEREXAMPLE
        print(line)
    return status


def _load_cover(args):
    default = _bounds(args.bounds) if args.bounds else None
    return parse_cover(_read(args.path), default)


def cmd_sheaf_check(args) -> int:
    cover = _load_cover(args)
    bad = incompatible_pair(cover)
    print(f"items={len(cover.items)} base={format_lifetime(cover.base, args.decimals)}")
    if bad is not None:
        print("compatible=false")
        print(f"incompatible items {bad[0]},{bad[1]}", file=sys.stderr)
        return EXIT_INVALID
    print("compatible=true")
    z = glue(cover)
    print(f"glued={format_lifetime(z, args.decimals)}")
    for i, it in enumerate(cover.items):
        back = restrict(z, cover.base, it.patch)
        verdict = "ok" if back == it.section else "MISMATCH"
        print(f"restrict[{i}]={format_lifetime(back, args.decimals)} {verdict}")
    return EXIT_OK


def cmd_sheaf_glue(args) -> int:
    z = glue(_load_cover(args))
    print(f"glued={format_lifetime(z, args.decimals)}")
    return EXIT_OK


def _field(args) -> Field:
    return Field(args.field)


def _dims(args, c) -> list[int]:
    if args.dim is not None:
        return [args.dim]
    return list(range(max(c.top_dim, 0) + 1))


def cmd_homology_betti(args) -> int:
    c = parse_complex(_read(args.path))
    curves = [betti_curve(c, n, _field(args)) for n in _dims(args, c)]
    if args.format == "svg":
        _emit(barcode_svg(curves, args.decimals), args.out)
    else:
        _emit("".join(cv.to_csv() for cv in curves), args.out)
    return EXIT_OK


def _pairs(args, c):
    pairs = persistence_pairs(c, _field(args))
    if args.dim is not None:
        pairs = [p for p in pairs if p.dimension == args.dim]
    return pairs


def _diagram_svg(args, c, pairs) -> str:
    dims = sorted({p.dimension for p in pairs})
    per_dim = {
        n: diagram([p for p in pairs if p.dimension == n], c.bounds, args.collapse_multiplicity)
        for n in dims
    }
    return diagram_svg(per_dim, c.bounds, args.decimals)


def cmd_homology_pairs(args) -> int:
    c = parse_complex(_read(args.path))
    pairs = _pairs(args, c)
    if args.format == "svg":
        _emit(_diagram_svg(args, c, pairs), args.out)
    else:
        _emit(pairs_to_csv(pairs), args.out)
    return EXIT_OK


def cmd_homology_diagram(args) -> int:
    c = parse_complex(_read(args.path))
    pairs = _pairs(args, c)
    if args.format == "csv":
        lines = []
        for n in sorted({p.dimension for p in pairs}):
            d = diagram([p for p in pairs if p.dimension == n], c.bounds, args.collapse_multiplicity)
            lines += [f"{n},{pt.x1},{pt.x2},{m}\n" for pt, m in d.items()]
        _emit("".join(lines), args.out)
    else:
        _emit(_diagram_svg(args, c, pairs), args.out)
    return EXIT_OK


def cmd_complex_validate(args) -> int:
    c = parse_complex(_read(args.path))
    print(f"ok: {len(c)} simplices, top dimension {c.top_dim}, bounds ({c.bounds.eps1},{c.bounds.eps2})")
    return EXIT_OK


def cmd_complex_print(args) -> int:
    c = parse_complex(_read(args.path))
    _emit(format_complex(c), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lifetime-topos", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def common(p, *, bounds_default=("10", "10"), decimals=True):
        p.add_argument("--bounds", nargs=2, metavar=("E1", "E2"), default=bounds_default)
        if decimals:
            p.add_argument("--decimals", type=int, metavar="K", default=None)

    algebra = groups.add_parser("algebra", help="evaluate expressions and check laws")
    alg_sub = algebra.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = alg_sub.add_parser("eval", help="evaluate an expression over lifetimes")
    p.add_argument("expression")
    common(p)
    p.set_defaults(func=cmd_algebra_eval)
    p = alg_sub.add_parser("laws", help="run the seeded law suites")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p, decimals=False)
    p.set_defaults(func=cmd_algebra_laws)

    sheaf = groups.add_parser("sheaf", help="compatibility and gluing of cover files")
    sheaf_sub = sheaf.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func in (("check", cmd_sheaf_check), ("glue", cmd_sheaf_glue)):
        p = sheaf_sub.add_parser(name)
        p.add_argument("path")
        common(p, bounds_default=None)
        p.set_defaults(func=func)

    homology = groups.add_parser("homology", help="betti curves, persistence pairs, diagrams")
    hom_sub = homology.add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name, func, fmt in (
        ("betti", cmd_homology_betti, "csv"),
        ("pairs", cmd_homology_pairs, "csv"),
        ("diagram", cmd_homology_diagram, "svg"),
    ):
        p = hom_sub.add_parser(name)
        p.add_argument("path")
        p.add_argument("--dim", type=int, default=None)
        p.add_argument("--field", choices=[f.value for f in Field], default="f2")
        p.add_argument("--format", choices=["csv", "svg"], default=fmt)
        p.add_argument("--out", default=None)
        p.add_argument("--decimals", type=int, metavar="K", default=None)
        if name != "betti":
            p.add_argument("--collapse-multiplicity", action="store_true")
        p.set_defaults(func=func)

    cx = groups.add_parser("complex", help="validate or pretty-print complex files")
    cx_sub = cx.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = cx_sub.add_parser("validate")
    p.add_argument("path")
    p.set_defaults(func=cmd_complex_validate)
    p = cx_sub.add_parser("print")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_complex_print)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ComplexParseError, CoverParseError, expr.ExprError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GluingError as exc:
        print(f"error: incompatible items {exc.pair[0]},{exc.pair[1]}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ComplexValidationError, HomologyError, AlgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
