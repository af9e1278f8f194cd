"""Command line interface: ``hecke-residual <verb> [options]``.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage
error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from .bn import distinguished_diagrams, fiber_partitions
from .classification import (
    affine_to_json,
    affine_to_markdown,
    count_affine_ds,
    count_graded_ds,
    gcc_table,
    spectral_diagram,
)
from .errors import ConfigurationError, DomainError, HeckeResidualError, NotResidualError
from .linform import as_rational, format_rational, format_vector, parse_rational_list
from .mfunction import build_m_function, evaluate_m, is_regular_via_m, vanishing_order
from .partitions import Partition
from .residual import (
    GenericFamily,
    confluence_table,
    confluence_to_json,
    confluence_to_markdown,
    enumerate_generic_orbits,
    evaluate_orbit,
    families_to_json,
    families_to_markdown,
)
from .roots import RootSystem, build_root_system
from .verify import SUITES, run_suite


def _tag(args) -> str:
    tag = args.type
    if tag is None:
        raise ConfigurationError("--type is required")
    if not any(ch.isdigit() for ch in tag):
        if args.n is None:
            raise ConfigurationError(f"type {tag} needs a rank: use e.g. {tag}3 or --n 3")
        tag = f"{tag}{args.n}"
    return tag


def _root_system(args) -> RootSystem:
    return build_root_system(_tag(args))


def _selected(R: RootSystem, args) -> list[GenericFamily]:
    families = enumerate_generic_orbits(R)
    if getattr(args, "family", None):
        chosen = [f for f in families if f.label == args.family]
        if not chosen:
            raise DomainError(f"{R.tag} has no family {args.family!r}")
        return chosen
    if getattr(args, "partition", None):
        label = Partition.parse(args.partition).label()
        chosen = [f for f in families if label in re.findall(r"\([^)]*\)", f.label or "")]
        if not chosen:
            raise DomainError(f"{R.tag} has no family for partition {label}")
        return chosen
    return families


def _k(R: RootSystem, text: str | None):
    if text is None:
        raise ConfigurationError("--k is required")
    values = parse_rational_list(text)
    if len(values) != len(R.params):
        raise DomainError(f"{R.tag} takes {len(R.params)} parameters, got {len(values)}")
    return values


def cmd_enumerate(args) -> str:
    R = _root_system(args)
    families = enumerate_generic_orbits(R, method=args.method)
    if args.format == "json":
        return families_to_json(families)
    return families_to_markdown(R, families)


def cmd_regularity(args) -> str:
    R = _root_system(args)
    families = _selected(R, args)
    if args.k is None:
        if args.format == "json":
            return families_to_json(families)
        return families_to_markdown(R, families)
    k = _k(R, args.k)
    rows = []
    for fam in families:
        rows.append((fam, evaluate_orbit(fam, k, R)))
    if args.format == "json":
        return json.dumps([
            {"label": fam.name(), "k": [format_rational(x) for x in k],
             "point": [format_rational(x) for x in point]}
            for fam, point in rows
        ], indent=2)
    lines = ["| orbit | dominant point |", "|---|---|"]
    lines += [f"| {fam.name()} | {format_vector(point)} |" for fam, point in rows]
    return "\n".join(lines) + "\n"


def cmd_confluence(args) -> str:
    R = _root_system(args)
    k = _k(R, args.k)
    if args.weights:
        table = gcc_table(R, k)
        if args.format == "json":
            return json.dumps([
                {"diagram": [format_rational(x) for x in d],
                 "fiber": [{"family": name, "multiplicity": mult} for name, mult in fiber],
                 "weight": sum(mult for _, mult in fiber)}
                for d, fiber in table
            ], indent=2)
        lines = ["| diagram | fiber | weight |", "|---|---|---|"]
        for i, (d, fiber) in enumerate(table, start=1):
            names = ", ".join(f"{name}:{mult}" for name, mult in fiber)
            lines.append(f"| D{i} = {format_vector(d)} | {names} | {sum(m for _, m in fiber)} |")
        return "\n".join(lines) + "\n"
    rows = confluence_table(R, k)
    if args.format == "json":
        return confluence_to_json(R, k, rows)
    return confluence_to_markdown(R, k, rows)


def cmd_fibers(args) -> str:
    if args.type not in ("B", None) or args.n is None or args.m is None:
        raise ConfigurationError("fibers needs --type B --n N --m M")
    m = as_rational(args.m)
    out = []
    for D in distinguished_diagrams(args.n, m):
        out.append((D, fiber_partitions(D, m, args.n)))
    if args.format == "json":
        return json.dumps([
            {"diagram": [format_rational(x) for x in D.vector()],
             "fiber": [lam.label() for lam in fiber]}
            for D, fiber in out
        ], indent=2)
    return "".join(f"{D}: {','.join(lam.label() for lam in fiber)}\n" for D, fiber in out)


def cmd_mfun(args) -> str:
    R = _root_system(args)
    families = _selected(R, args)
    if len(families) != 1:
        raise ConfigurationError("choose one family with --family or --partition")
    fam = families[0]
    M = build_m_function(fam)
    result = {"family": fam.name(), "function": str(M)}
    if args.f is not None:
        f = parse_rational_list(args.f)
        base = as_rational(args.base)
        num, den = vanishing_order(M, f)
        value = evaluate_m(M, f, base)
        result.update({
            "f": [format_rational(x) for x in f],
            "base": format_rational(base),
            "vanishing_order": [num, den],
            "regular": is_regular_via_m(fam, f),
            "value": format_rational(value) if not isinstance(value, float) else repr(value),
        })
    if args.format == "json":
        return json.dumps(result, indent=2)
    return "".join(f"{key}: {value}\n" for key, value in result.items())


def cmd_count(args) -> str:
    tag = _tag(args)
    if args.k is None:
        raise ConfigurationError("--k is required")
    groups = [parse_rational_list(part) for part in args.k.split(";")]
    result = count_graded_ds(tag, groups if len(groups) > 1 else groups[0])
    if args.format == "json":
        return json.dumps({
            "type": tag,
            "multiplicities": [{"family": name, "multiplicity": mult} for name, mult in result.multiplicities],
            "total": result.total,
        }, indent=2)
    lines = ["| family | multiplicity |", "|---|---|"]
    lines += [f"| {name} | {mult} |" for name, mult in result.multiplicities]
    lines.append(f"| total | {result.total} |")
    return "\n".join(lines) + "\n"


def cmd_affine(args) -> str:
    tag = _tag(args)
    if args.spectral:
        diagram = spectral_diagram(tag, args.lattice)
        if args.format == "json":
            return json.dumps(diagram.to_json(), indent=2)
        return diagram.to_markdown() + "\n"
    f = parse_rational_list(args.f) if args.f is not None else None
    result = count_affine_ds(tag, f=f, lattice=args.lattice)
    if args.format == "json":
        return json.dumps(affine_to_json(result), indent=2)
    return affine_to_markdown(result) + "\n"


def cmd_verify(args) -> tuple[str, bool]:
    checks = run_suite(args.suite)
    ok = all(c.ok for c in checks)
    if args.format == "json":
        return json.dumps({
            "suite": args.suite,
            "passed": ok,
            "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks],
        }, indent=2), ok
    return "".join(c.line() + "\n" for c in checks), ok


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecke-residual", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, *, k=False):
        p.add_argument("--type", help="root system, e.g. F4, G2, B3 (or B with --n)")
        p.add_argument("--n", type=int, help="rank when --type has none")
        p.add_argument("--format", choices=("md", "json"), default="md")
        if k:
            p.add_argument("--k", help='parameters, e.g. "1,1/2"')
        return p

    p = common(sub.add_parser("enumerate", help="generic residual orbits"))
    p.add_argument("--method", choices=("auto", "solve", "partitions"), default="auto")
    p.set_defaults(run=cmd_enumerate)

    p = common(sub.add_parser("regularity", help="singular hyperplanes, or evaluation at --k"), k=True)
    p.add_argument("--partition")
    p.add_argument("--family")
    p.set_defaults(run=cmd_regularity)

    p = common(sub.add_parser("confluence", help="families grouped by their value at --k"), k=True)
    p.add_argument("--weights", action="store_true", help="include discrete series multiplicities")
    p.set_defaults(run=cmd_confluence)

    p = common(sub.add_parser("fibers", help="B_n partitions over each diagram on the line k2 = m*k1"))
    p.add_argument("--m", required=True)
    p.set_defaults(run=cmd_fibers)

    p = common(sub.add_parser("mfun", help="factored regularity function of one family"))
    p.add_argument("--partition")
    p.add_argument("--family")
    p.add_argument("--f", help='log-parameters, e.g. "1,1"')
    p.add_argument("--base", default="2")
    p.set_defaults(run=cmd_mfun)

    p = common(sub.add_parser("count", help="discrete series of the graded algebra"), k=True)
    p.set_defaults(run=cmd_count)

    p = common(sub.add_parser("affine", help="discrete series of the affine algebra by alcove vertex"))
    p.add_argument("--lattice", choices=("weight", "root"), default="weight")
    p.add_argument("--f", help="log-parameters of the datum")
    p.add_argument("--spectral", action="store_true", help="print the spectral diagram instead")
    p.set_defaults(run=cmd_affine)

    p = sub.add_parser("verify", help="run a self-check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.run(args)
    except NotResidualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for h in exc.hyperplanes:
            print(f"violated: {h}", file=sys.stderr)
        return exc.exit_code
    except HeckeResidualError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    ok = True
    if isinstance(output, tuple):
        output, ok = output
    sys.stdout.write(output if output.endswith("\n") else output + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
