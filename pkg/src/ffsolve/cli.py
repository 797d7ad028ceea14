"""Command-line front end: ``ffsolve {solve,det,adj,count,sweep}``.

Exit codes: 0 success, 2 malformed input, 3 zero corner minor (rerun with
``--permute``), 4 structurally singular matrix.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .errors import DomainError, ParseError, ShapeError, SingularMinor, StructurallySingular
from .io import read_problem
from .matrix import Mat, MulBackend, block
from .metrics import predict_one_pass, predict_strassen_md, predict_tree, sweep
from .opcount import OpCounts
from .ring import ZZ, domain_for
from .solver import PartitionStrategy, adjugate, determinant, solve

EXIT_PARSE, EXIT_SINGULAR, EXIT_STRUCTURAL = 2, 3, 4


def parse_strategy(text: str) -> PartitionStrategy:
    if text in ("dichotomous", "onepass", "forward"):
        return PartitionStrategy(text)
    if text.startswith("fixed="):
        try:
            rows = int(text[len("fixed="):])
            return PartitionStrategy.fixed_upper(rows)
        except ValueError:
            pass
    raise argparse.ArgumentTypeError(f"invalid strategy {text!r}: use dichotomous, onepass, forward or fixed=<s>")


def _sizes(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size list {text!r}") from None


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strategy", type=parse_strategy, default=PartitionStrategy("dichotomous"),
                   help="dichotomous | onepass | forward | fixed=<s> (default: dichotomous)")
    p.add_argument("--mul", choices=("classical", "strassen"), default="classical")
    p.add_argument("--cutoff", type=int, default=8, help="Strassen cutoff (default: 8)")
    p.add_argument("--domain", choices=("int", "poly"), default=None,
                   help="expected domain; must agree with the file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ffsolve", description="Exact fraction-free linear algebra over Z and Z[t].")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("solve", "solve the system given by an extended matrix"),
        ("det", "determinant of the leading square block"),
        ("adj", "adjugate of the leading square block"),
        ("count", "instrumented operation counts of a solve"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("path")
        _common(p)
        p.add_argument("--permute", action="store_true", help="reorder rows so every corner minor is nonzero")
        p.add_argument("--count", action="store_true", help="also print operation counts")
    p = sub.add_parser("sweep", help="instrumented solves over a list of sizes, written as CSV")
    _common(p)
    p.add_argument("--sizes", type=_sizes, default=[], help="comma-separated sizes, ascending")
    p.add_argument("--extra", type=int, default=1, help="m - n for every size (default: 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-", help="CSV destination (default: stdout)")
    return parser


def _backend(args) -> MulBackend:
    if args.cutoff < 1:
        raise ParseError("--cutoff must be >= 1")
    return MulBackend(args.mul, args.cutoff)


def _load(args) -> Mat:
    prob = read_problem(args.path)
    if args.domain is not None and args.domain != prob.domain.kind:
        raise ParseError(f"file domain {prob.domain.kind!r} does not match --domain {args.domain}")
    return prob.matrix


def _square(a: Mat) -> Mat:
    if a.cols < a.rows:
        raise ShapeError(f"need at least {a.rows} columns, got {a.cols}")
    return block(a, (0, a.rows), (0, a.rows))


def _fmt_counts(c: OpCounts, predicted: OpCounts) -> str:
    return (
        f"adds={c.adds} muls={c.muls} divs={c.divs} "
        f"(predicted {predicted.adds}/{predicted.muls}/{predicted.divs})"
    )


def _report_counts(ctx: OpCounts, n: int, m: int, args, out) -> None:
    backend = _backend(args)
    print(_fmt_counts(ctx, predict_tree(n, m, args.strategy, backend)), file=out)
    print(f"unit divisions (by delta^0, not in divs)={ctx.unit_divs}", file=out)
    if m == n + 1 and args.strategy.kind == "onepass":
        o = predict_one_pass(n)
        print(f"one-pass closed form: adds={o.a_nm} muls={o.m_nm} divs={o.d_nm}", file=out)
    if m == n + 1 and backend.kind == "strassen" and n >= 2 and not n & (n - 1):
        md = ctx.muls + ctx.divs + ctx.unit_divs
        print(f"muls+divs+unit_divs={md} (Strassen closed form {predict_strassen_md(n)})", file=out)


def _fmt_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_solution(sol, dom) -> list[str]:
    fmt = dom.format
    lines = [f"delta = {fmt(sol.delta_n)}", "minors:", str(sol.minors)]
    if sol.is_square and dom is ZZ:
        xs = ", ".join(_fmt_fraction(x) for x in sol.solution())
        lines.append(f"delta = {fmt(sol.delta_n)}; x = ({xs})")
        return lines
    free = [f"x{sol.n + 1 + p}" for p in range(sol.n_free)]
    if free:
        lines.append("free unknowns: " + ", ".join(free))
    for j in range(sol.n):
        row = sol.minors.row(j)
        num = fmt(row[-1])
        for p, name in enumerate(free):
            if not dom.is_zero(row[p]):
                num += f" - ({fmt(row[p])})*{name}"
        lines.append(f"x{j + 1} = ({num}) / {fmt(sol.delta_n)}")
    return lines


def cmd_solve(args, out) -> int:
    a = _load(args)
    ctx = OpCounts()
    sol = solve(a, args.strategy, _backend(args), ctx, permute=args.permute)
    for ln in _fmt_solution(sol, a.domain):
        print(ln, file=out)
    if args.count:
        _report_counts(ctx, a.rows, a.cols, args, out)
    return 0


def cmd_det(args, out) -> int:
    a = _square(_load(args))
    ctx = OpCounts()
    d = determinant(a, args.strategy, _backend(args), ctx, permute=args.permute)
    print(a.domain.format(d), file=out)
    if args.count:
        _report_counts(ctx, a.rows, a.cols, args, out)
    return 0


def cmd_adj(args, out) -> int:
    a = _square(_load(args))
    ctx = OpCounts()
    g = adjugate(a, args.strategy, _backend(args), ctx, permute=args.permute)
    print(str(g), file=out)
    if args.count:
        _report_counts(ctx, a.rows, 2 * a.rows, args, out)
    return 0


def cmd_count(args, out) -> int:
    a = _load(args)
    ctx = OpCounts()
    solve(a, args.strategy, _backend(args), ctx, permute=args.permute)
    _report_counts(ctx, a.rows, a.cols, args, out)
    return 0


def cmd_sweep(args, out) -> int:
    domain = domain_for(args.domain or "int")
    sink = out if args.out == "-" else args.out
    sweep(args.sizes, args.strategy, _backend(args), sink, extra_cols=args.extra, seed=args.seed, domain=domain)
    return 0


COMMANDS = {"solve": cmd_solve, "det": cmd_det, "adj": cmd_adj, "count": cmd_count, "sweep": cmd_sweep}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (ParseError, ShapeError, DomainError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except SingularMinor as exc:
        print(f"error: {exc}", file=err)
        return EXIT_SINGULAR
    except StructurallySingular as exc:
        print(f"error: {exc}", file=err)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
