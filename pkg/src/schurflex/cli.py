"""Command line front end.

Exit codes: 0 success, 1 usage or invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .cominuscule import build_space, enumerate_classes
from .errors import ConsistencyError, ExtremalClassError, InvalidInput
from .invariants import AJInvariant, compute_aJ, ideal_from_aj, shape_violation, spinor_r
from .rigidity import classify, flex_certificate, obstruction_report
from .rootsys import format_root
from .translation import (
    class_to_partition,
    from_decreasing,
    incidence_description,
    make_partition,
    partition_family,
    partition_to_class,
    quadric_parameters,
    quadric_rigid,
    quadric_selector,
    rigid_by_partition,
    to_decreasing,
)
from .verification import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise InvalidInput(f"expected comma-separated integers, got {text!r}") from None


def _space(args):
    if args.family.upper() in ("A", "B", "C", "D") and args.rank is None:
        raise UsageError(f"--rank is required for type {args.family.upper()}")
    try:
        return build_space(args.family, args.rank, args.node)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from None


def _partition_view(space, cls, convention):
    try:
        partition_family(space)
    except InvalidInput:
        return None
    p = class_to_partition(space, cls)
    return list(to_decreasing(p) if convention == "decreasing" else p.parts)


def _rows(space, poset, convention):
    rows = []
    for k, (cls, rep) in enumerate(zip(poset.classes, poset.reports)):
        row = {
            "id": k,
            "dim": cls.dim,
            "degree": poset.degrees[k],
            "a": None if rep.aj is None else rep.aj.a,
            "J": None if rep.aj is None else list(rep.aj.J),
            "partition": _partition_view(space, cls, convention),
            "rigid": rep.rigid,
            "witnesses": {"h1": len(rep.h1), "h2": len(rep.h2)},
        }
        if space.kind == "spinor" and space.node == space.rank:
            row["r"] = None if rep.aj is None else spinor_r(space, rep.aj)
        rows.append(row)
    return rows


_J_LABELS = {
    "grassmannian": "j_1 > ... > j_p are the marks below the node, k_1 < ... < k_q those above",
    "lagrangian": "j_1 > ... > j_p",
    "spinor": "j_1 > ... > j_p",
}


def _space_info(space, convention):
    return {
        "name": space.name,
        "family": space.family,
        "rank": space.rank,
        "node": space.node,
        "dim": space.dim,
        "conventions": {
            "J": "sorted node indices, Bourbaki numbering",
            "j_labels": _J_LABELS.get(space.kind, "none"),
            "partition": "weakly decreasing shape" if convention == "decreasing" else "strictly increasing",
        },
    }


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "*" if v else ""
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _flat(row):
    out = {
        "id": row["id"],
        "dim": row["dim"],
        "degree": row["degree"],
        "a:J": "" if row["a"] is None else f"{row['a']}:{_cell(row['J'])}",
        "partition": "" if row["partition"] is None else "(" + _cell(row["partition"]) + ")",
    }
    if "r" in row:
        out["r"] = _cell(row["r"])
    out["rigid"] = _cell(row["rigid"])
    out["h1"] = row["witnesses"]["h1"]
    out["h2"] = row["witnesses"]["h2"]
    return out


def render_list(space, poset, fmt, convention="increasing") -> str:
    rows = _rows(space, poset, convention)
    if fmt == "json":
        doc = {"space": _space_info(space, convention), "classes": rows}
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    flat = [_flat(r) for r in rows]
    cols = list(flat[0])
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return buf.getvalue()
    if fmt == "md":
        lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
        lines += ["| " + " | ".join(str(r[c]) for c in cols) + " |" for r in flat]
        return "\n".join(lines) + "\n"
    widths = {c: max(len(c), *(len(str(r[c])) for r in flat)) for c in cols}
    lines = [f"{space.name}: {len(flat)} classes, {sum(r['rigid'] for r in rows)} rigid"]
    lines.append("  ".join(c.rjust(widths[c]) for c in cols))
    lines += ["  ".join(str(r[c]).rjust(widths[c]) for c in cols) for r in flat]
    return "\n".join(lines) + "\n"


def render_dot(space, poset) -> str:
    lines = [f'digraph "{space.name}" {{', "  rankdir=BT;", "  node [shape=circle];"]
    for k, cls in enumerate(poset.classes):
        extra = ", peripheries=2" if poset.reports[k].rigid else ""
        lines.append(f'  n{k} [label="{cls.dim}/{poset.degrees[k]}"{extra}];')
    for lo, hi in poset.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _pairs(pairs):
    return [[format_root(x), format_root(y)] for x, y in pairs]


def translate(space, partition=None, aj_text=None, convention="increasing") -> dict:
    if (partition is None) == (aj_text is None):
        raise UsageError("give exactly one of --partition and --aj")
    if partition is not None:
        family, params = partition_family(space)
        values = _int_list(partition)
        p = from_decreasing(family, params, values) if convention == "decreasing" else make_partition(space, values)
        cls = partition_to_class(space, p.parts)
    else:
        aj = AJInvariant.parse(aj_text)
        rule = shape_violation(space, aj)
        if rule:
            raise InvalidInput(f"(a, J) = {aj} is not valid for {space.name}: {rule}")
        cls = ideal_from_aj(space, aj)
        if space.is_extremal(cls) or compute_aJ(space, cls) != aj:
            raise InvalidInput(f"(a, J) = {aj} does not describe a class of {space.name}")
    poset = enumerate_classes(space)
    rep = obstruction_report(space, cls)
    out = {
        "space": space.name,
        "dim": cls.dim,
        "degree": poset.degrees[poset.index[cls]],
        "aj": None if rep.aj is None else str(rep.aj),
        "rigid": rep.rigid,
        "witnesses": {"h1": _pairs(rep.h1), "h2": _pairs(rep.h2)},
    }
    criterion = None
    try:
        partition_family(space)
        p = class_to_partition(space, cls)
        out["partition"] = list(p.parts)
        out["shape"] = list(to_decreasing(p))
        criterion = rigid_by_partition(p)
    except InvalidInput:
        if space.kind in ("odd_quadric", "even_quadric"):
            parity, m = quadric_parameters(space)
            d, branch = quadric_selector(space, cls)
            out["branch"] = branch
            criterion = quadric_rigid(parity, m, d, branch)
    out["rigid_by_criterion"] = criterion
    if not space.is_extremal(cls) and space.kind != "exceptional":
        out["incidence"] = incidence_description(space, cls).text
    if not rep.rigid:
        cert = flex_certificate(space, cls)
        out["certificate"] = {
            "kind": cert.kind,
            "gamma": format_root(cert.gamma),
            "partner": format_root(cert.partner),
            "divisor_dim": cert.divisor.dim,
            "checks": {name: ok for name, ok in cert.checks},
        }
    return out


def _render_translate(info, fmt) -> str:
    if fmt == "json":
        return json.dumps(info, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    lines = [f"space       {info['space']}", f"dimension   {info['dim']}", f"degree      {info['degree']}"]
    if "partition" in info:
        lines.append("partition   (" + ",".join(map(str, info["partition"])) + ")")
        lines.append("shape       (" + ",".join(map(str, info["shape"])) + ")")
    lines.append(f"a:J         {info['aj'] or 'extremal'}")
    verdict = "rigid" if info["rigid"] else "flexible"
    lines.append(f"verdict     {verdict} (roots)")
    if info["rigid_by_criterion"] is not None:
        lines.append(f"            {'rigid' if info['rigid_by_criterion'] else 'flexible'} (criterion)")
    for kind in ("h1", "h2"):
        for x, y in info["witnesses"][kind]:
            lines.append(f"{kind.upper()} fails   ({x}, {y})")
    if "incidence" in info:
        lines.append("incidence")
        lines += ["  " + l for l in info["incidence"].splitlines()]
    if "certificate" in info:
        c = info["certificate"]
        lines.append(f"certificate {c['kind']}: gamma={c['gamma']}, partner={c['partner']}, divisor dim {c['divisor_dim']}")
        lines += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in c["checks"].items()]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurflex", description="Schur rigidity of Schubert classes in cominuscule spaces")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def space_args(p):
        p.add_argument("--family", required=True, help="A, B, C, D, E6 or E7")
        p.add_argument("--rank", type=int)
        p.add_argument("--node", type=int, help="cominuscule node (defaults: B 1, C n, E6 6, E7 7)")

    p = sub.add_parser("list", help="one row per Schubert class")
    space_args(p)
    p.add_argument("--format", choices=("json", "csv", "md", "text"), default="text")
    p.add_argument("--convention", choices=("increasing", "decreasing"), default="increasing")

    p = sub.add_parser("hasse", help="Hasse poset as a DOT digraph")
    space_args(p)
    p.add_argument("--dot", action="store_true", help="DOT output (the only format)")

    p = sub.add_parser("verify", help="run cross-check suites")
    p.add_argument("suite", choices=SUITES + ("all",))

    p = sub.add_parser("translate", help="partition <-> (a,J), verdict and certificate")
    space_args(p)
    p.add_argument("--partition")
    p.add_argument("--aj", help="'a:j1,j2,...'")
    p.add_argument("--convention", choices=("increasing", "decreasing"), default="increasing")
    p.add_argument("--format", choices=("json", "text"), default="text")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            results = run_suite(args.suite)
            for r in results:
                out.write(r.line() + "\n")
            return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY
        space = _space(args)
        if args.command == "list":
            out.write(render_list(space, classify(space), args.format, args.convention))
        elif args.command == "hasse":
            out.write(render_dot(space, classify(space)))
        else:
            info = translate(space, args.partition, args.aj, args.convention)
            out.write(_render_translate(info, args.format))
            crit = info["rigid_by_criterion"]
            if crit is not None and crit != info["rigid"]:
                sys.stderr.write("criterion and root computation disagree\n")
                return EXIT_VERIFY
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"schurflex: error: {exc}\n")
        return EXIT_USAGE
    except (ExtremalClassError, InvalidInput) as exc:
        sys.stderr.write(f"schurflex: error: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        sys.stderr.write(f"schurflex: internal check failed: {exc}\n")
        return EXIT_VERIFY
    return EXIT_OK
