"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage, resource or I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .exceptions import AbelianIdealsError
from .genfun import closed_form_polynomial, verify
from .ideal_enum import dimension_distribution, enumerate_ideals, minimal_roots
from .poset import compute_omega, hasse_to_dot
from .root_system import (
    ENUMERATION_RANK_CAP,
    LieType,
    all_types,
    build_root_system,
    format_epsilon,
    height,
    shorthand,
)

FORMATS = ("text", "csv", "records")
DEFAULT_SWEEP_RANK = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _lie_type(text):
    try:
        return LieType.parse(text)
    except AbelianIdealsError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Out:
    """Collects rows and renders them in the requested format."""

    def __init__(self, fmt, fields):
        self.fmt = fmt
        self.fields = fields
        self.lines = []
        self.rows = []

    def row(self, text, **record):
        if self.fmt == "text":
            self.lines.append(text)
        elif record:
            self.rows.append(record)

    def render(self):
        if self.fmt == "text":
            return "".join(line + "\n" for line in self.lines)
        if self.fmt == "records":
            return "".join(json.dumps(r, sort_keys=False) + "\n" for r in self.rows)
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=self.fields, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        for r in self.rows:
            writer.writerow({k: (" ".join(v) if isinstance(v, list) else v) for k, v in r.items()})
        return buf.getvalue()


def _eps_text(rs, root):
    if rs.epsilon_view is None:
        return ""
    return format_epsilon(rs.epsilon(root))


def cmd_roots(args):
    rs = build_root_system(args.type)
    out = _Out(args.format, ["type", "index", "coeffs", "height", "epsilon", "highest"])
    for k, root in enumerate(rs.positive_roots, start=1):
        top = root == rs.highest_root
        eps = _eps_text(rs, root)
        text = f"{k:>3}  {shorthand(root)}  ht={height(root)}"
        if eps:
            text += f"  {eps}"
        if top:
            text += f"  theta={root}"
        out.row(
            text, type=str(rs.lie_type), index=k, coeffs=shorthand(root),
            height=height(root), epsilon=eps, highest=top,
        )
    return out, 0


def cmd_omega(args):
    rs = build_root_system(args.type)
    om = compute_omega(rs)
    out = _Out(args.format, ["type", "index", "coeffs", "epsilon", "covered_by"])
    for i, root in enumerate(om.elements):
        ups = [shorthand(om.elements[u]) for u in om.upper_covers(i)]
        eps = _eps_text(rs, root)
        text = f"{i:>3}  {shorthand(root)}"
        if eps:
            text += f"  {eps}"
        if ups:
            text += "  < " + " ".join(ups)
        out.row(text, type=str(rs.lie_type), index=i, coeffs=shorthand(root), epsilon=eps, covered_by=ups)
    out.row(f"nodes {len(om.elements)} edges {len(om.covers)}")
    return out, 0


def cmd_hasse(args):
    rs = build_root_system(args.type)
    om = compute_omega(rs)
    dot = hasse_to_dot(om)
    summary = f"{rs.lie_type}: nodes {len(om.elements)} edges {len(om.covers)}"
    if args.out is None:
        sys.stdout.write(dot)
        print(summary, file=sys.stderr)
        return None, 0
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(dot)
    out = _Out(args.format, ["type", "nodes", "edges", "path"])
    out.row(summary, type=str(rs.lie_type), nodes=len(om.elements), edges=len(om.covers), path=args.out)
    return out, 0


def _max_rank(args):
    return args.max_rank if args.max_rank is not None else ENUMERATION_RANK_CAP


def cmd_ideals(args):
    rs = build_root_system(args.type)
    name = str(rs.lie_type)
    if args.mode == "dist":
        dist = dimension_distribution(rs, max_rank=_max_rank(args), workers=args.workers)
        out = _Out(args.format, ["type", "dimension", "count"])
        if args.format == "text":
            out.row(" ".join(f"{d}:{c}" for d, c in enumerate(dist.counts)))
        else:
            for d, c in enumerate(dist.counts):
                out.row("", type=name, dimension=d, count=c)
        out.row(f"total {dist.total}", type=name, dimension="total", count=dist.total)
        return out, 0
    ideals = enumerate_ideals(rs, max_rank=_max_rank(args))
    key = "roots" if args.mode == "list" else "generators"
    out = _Out(args.format, ["type", "dimension", key])
    for ideal in ideals:
        roots = ideal.roots if args.mode == "list" else minimal_roots(rs, ideal).roots
        labels = [shorthand(a) for a in roots]
        out.row(f"{ideal.dimension}: {{{', '.join(labels)}}}", type=name, dimension=ideal.dimension, **{key: labels})
    out.row(f"total {len(ideals)}", type=name, dimension="total", **{key: len(ideals)})
    return out, 0


def cmd_genfun(args):
    t = args.type
    poly = closed_form_polynomial(t)
    out = _Out(args.format, ["type", "dimension", "count"])
    if args.format == "text":
        out.row(f"{t}: " + " ".join(str(c) for c in poly.coeffs))
    else:
        for d, c in enumerate(poly.coeffs):
            out.row("", type=str(t), dimension=d, count=c)
    out.row(f"at 1: {poly(1)}", type=str(t), dimension="total", count=poly(1))
    return out, 0


def cmd_verify(args):
    if args.target.lower() == "all":
        bound = args.max_rank if args.max_rank is not None else DEFAULT_SWEEP_RANK
        types = all_types(bound)
        cap = max(bound, ENUMERATION_RANK_CAP)
    else:
        types = [_lie_type(args.target)]
        cap = _max_rank(args)
    out = _Out(args.format, ["type", "check", "status"])
    passed = total = 0
    for t in types:
        report = verify(t, max_rank=cap, workers=args.workers)
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            total += 1
            passed += check.passed
            text = f"{t} {check.name} {status}"
            if check.detail and not check.passed:
                text += f" ({check.detail})"
            out.row(text, type=str(t), check=check.name, status=status)
    ok = passed == total
    label = args.target.upper() if args.target.lower() != "all" else "all"
    out.row(
        f"summary: {passed}/{total} checks passed",
        type=label, check="summary", status="PASS" if ok else "FAIL",
    )
    return out, 0 if ok else 1


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format")
    common.add_argument("--max-rank", type=int, default=None, metavar="N", help="rank cap / sweep bound")
    common.add_argument("--workers", type=int, default=1, help="threads for enumeration")

    parser = _Parser(prog="abelian-ideals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", parents=[common], help="list positive roots")
    p.add_argument("type", type=_lie_type)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("omega", parents=[common], help="list the subposet Omega")
    p.add_argument("type", type=_lie_type)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("hasse", parents=[common], help="write the Hasse diagram of Omega as DOT")
    p.add_argument("type", type=_lie_type)
    p.add_argument("--out", default=None, metavar="PATH")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("ideals", parents=[common], help="enumerate abelian ideals")
    p.add_argument("type", type=_lie_type)
    p.add_argument("mode", nargs="?", choices=("list", "min-gens", "dist"), default="dist")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("genfun", parents=[common], help="closed-form generating polynomial")
    p.add_argument("type", type=_lie_type)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("verify", parents=[common], help="enumeration vs closed form")
    p.add_argument("target", help='a type such as "E8", or "all"')
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out, code = args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except argparse.ArgumentTypeError as exc:
        print(f"abelian-ideals: error: {exc}", file=sys.stderr)
        return 2
    except AbelianIdealsError as exc:
        print(f"abelian-ideals: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"abelian-ideals: I/O error: {exc}", file=sys.stderr)
        return 2
    if out is not None:
        sys.stdout.write(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
