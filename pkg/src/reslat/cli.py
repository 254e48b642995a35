"""Command line front end.

Exit codes: 0 when the command's answer is yes/valid, 1 when it is no or the
input algebra is invalid, 2 when an EquivalenceViolation fired (two provably
equal routes disagreed; always a bug worth reporting), 64 for usage errors,
74 for unreadable or unwritable files.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import catalog, fileformat, modelgen
from . import filters as flt
from . import pure as pr
from . import topology as top
from .core import ResiduatedLattice
from .errors import EquivalenceViolation, ReslatError, UsageError
from .gelfand import gelfand_verdict, is_soft
from .report import build_report, render_json

EX_OK = 0
EX_FALSE = 1
EX_VIOLATION = 2
EX_USAGE = 64
EX_IO = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _resolve(spec: str) -> ResiduatedLattice:
    """Catalog name (case insensitive) first, then a file path."""
    found = catalog.get(spec)
    if found is not None:
        return found
    if not os.path.exists(spec):
        raise OSError(f"no catalog entry or file named {spec!r}")
    return fileformat.load(spec)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    a = _resolve(args.algebra)
    ctx = flt.analysis(a)
    print(f"{a.label}: valid residuated lattice on {a.n} elements")
    print(
        f"filters={len(ctx.filters)} maximal={len(ctx.maximals)} "
        f"prime={len(ctx.primes)}"
    )
    return EX_OK


def _cmd_filters(args) -> int:
    a = _resolve(args.algebra)
    ctx = flt.analysis(a)
    pure_set = set(pr.pure_filters(a))
    for i, f in enumerate(ctx.filters):
        tags = []
        if f == a.full:
            tags.append("improper")
        if f in ctx.maximals:
            tags.append("maximal")
        if f in ctx.primes:
            tags.append("prime")
        if f in pure_set:
            tags.append("pure")
        gen = a.names[ctx.generator[i]]
        line = f"{a.set_repr(f)} generator={gen}"
        if tags:
            line += " " + ",".join(tags)
        print(line)
    return EX_OK


def _cmd_spectrum(args) -> int:
    a = _resolve(args.algebra)
    primes = flt.prime_filters(a)
    space = top.spec_space(a, args.kind)
    maxima = set(flt.maximal_filters(a))
    for p in primes:
        print(f"{a.set_repr(p)}" + (" maximal" if p in maxima else ""))
    print(f"{len(primes)} points, {len(space.closed)} closed sets")
    preds = top.space_predicates(space)
    print(" ".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(preds.items())))
    return EX_OK


def _cmd_gelfand(args) -> int:
    a = _resolve(args.algebra)
    verdict = gelfand_verdict(a)
    passed = sum(verdict.criteria.values())
    word = "yes" if verdict.verdict else "no"
    print(f"Gelfand: {word} ({passed}/{len(verdict.criteria)} criteria)")
    for name in sorted(verdict.witnesses):
        print(f"witness[{name}]: {verdict.witnesses[name]}")
    return EX_OK if verdict.verdict else EX_FALSE


def _cmd_pure(args) -> int:
    a = _resolve(args.algebra)
    spp = set(pr.purely_prime(a))
    pmax = set(pr.purely_maximal(a))
    for f in pr.pure_filters(a):
        tags = []
        if f in spp:
            tags.append("purely-prime")
        if f in pmax:
            tags.append("purely-maximal")
        print(f"{a.set_repr(f)}" + (" " + ",".join(tags) if tags else ""))
    homeo = pr.spp_max_homeo(a)
    print(f"pure spectrum homeomorphic to maximal spectrum: "
          f"{'yes' if homeo else 'no'}")
    return EX_OK if homeo else EX_FALSE


def _cmd_soft(args) -> int:
    a = _resolve(args.algebra)
    soft, routes = is_soft(a)
    for key in sorted(routes):
        print(f"{key}: {'yes' if routes[key] else 'no'}")
    print(f"soft: {'yes' if soft else 'no'}")
    return EX_OK if soft else EX_FALSE


def _cmd_search(args) -> int:
    for n in range(1, args.size + 1):
        rep = modelgen.classify_all(n, deep=args.deep, chains_only=args.chains)
        print(
            f"n={n}: lattices={rep.lattice_count} "
            f"structures={rep.structure_count} gelfand={rep.gelfand_count} "
            f"soft={rep.soft_count} local={rep.local_count} "
            f"semisimple={rep.semisimple_count} rickart={rep.rickart_count} "
            f"baer={rep.baer_count} prelinear={rep.prelinear_count}"
        )
    return EX_OK


def _cmd_report(args) -> int:
    a = _resolve(args.algebra)
    _emit(render_json(build_report(a)), args.output)
    return EX_OK


def _cmd_export_dot(args) -> int:
    a = _resolve(args.algebra)
    _emit(fileformat.export_dot(a, args.kind), args.output)
    return EX_OK


def _cmd_catalog(args) -> int:
    for name in catalog.catalog_names():
        a = catalog.get(name)
        print(f"{name}: {a.n} elements")
    return EX_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="reslat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, algebra=True):
        p = sub.add_parser(name, help=help_text)
        if algebra:
            p.add_argument("algebra", help="catalog name or algebra file")
        p.set_defaults(func=func)
        return p

    add("check", _cmd_check, "validate an algebra and summarize it")
    add("filters", _cmd_filters, "list the filters with their roles")
    p = add("spectrum", _cmd_spectrum, "describe the prime spectrum")
    p.add_argument("--kind", choices=("hull", "dual", "patch"), default="hull")
    add("gelfand", _cmd_gelfand, "evaluate the Gelfand criteria")
    add("pure", _cmd_pure, "list pure filters and the pure spectrum")
    add("soft", _cmd_soft, "evaluate the softness characterizations")
    p = sub.add_parser("search", help="enumerate all models up to a size")
    p.add_argument("size", type=int)
    p.add_argument("--chains", action="store_true", help="chains only")
    p.add_argument("--deep", action="store_true", help="also run law suites")
    p.set_defaults(func=_cmd_search)
    p = add("report", _cmd_report, "full JSON report")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p = add("export-dot", _cmd_export_dot, "Hasse diagram or spectrum as DOT")
    p.add_argument("--kind", choices=("hasse", "spec"), default="hasse")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p = sub.add_parser("catalog", help="list built-in algebras")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except SystemExit as exc:
        return EX_OK if exc.code in (0, None) else EX_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except EquivalenceViolation as exc:
        print(f"equivalence violation: {exc}", file=sys.stderr)
        if exc.detail is not None:
            print(f"detail: {exc.detail}", file=sys.stderr)
        return EX_VIOLATION
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EX_IO
    except ReslatError as exc:
        print(f"invalid algebra: {exc}", file=sys.stderr)
        return EX_FALSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
