"""Exhaustive cross-check suites over families of spaces.

Each suite returns a list of :class:`CheckResult`; a check stops at its first
counterexample and reports it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional

import networkx as nx

from .cominuscule import build_space, enumerate_classes
from .errors import SchurFlexError
from .invariants import HIGHEST, LOWEST, AJInvariant, compute_aJ, extremal_weights, spinor_r as aj_spinor_r
from .rigidity import classify, flex_certificate
from .translation import (
    aj_to_partition,
    class_to_partition,
    lg_spinor_map,
    partition_dimension,
    partition_to_aj,
    partition_to_class,
    quadric_parameters,
    quadric_rigid,
    quadric_selector,
    rigid_by_partition,
    spinor_r,
)
from .weyl import inversion_set, poincare_dual, reflection_word, word_from_inversions

SUITES = ("dictionaries", "criteria", "duality", "structure", "figures")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    failure: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" first counterexample: {self.failure}" if self.failure else ""
        return f"[{status}] {self.name} ({self.cases} cases){tail}"


@lru_cache(maxsize=None)
def classified(family: str, rank: int, node: int):
    return classify(build_space(family, rank, node))


def grassmannians(max_n: int = 7):
    return [("A", n, k) for n in range(1, max_n + 1) for k in range(1, n + 1)]


def lagrangians(max_n: int = 6):
    return [("C", n, n) for n in range(2, max_n + 1)]


def spinors(max_n: int = 7):
    return [("D", n, n) for n in range(3, max_n + 1)]


def quadrics(max_n: int = 7):
    return [("B", n, 1) for n in range(2, max_n + 1)] + [("D", n, 1) for n in range(3, max_n + 1)]


def partition_spaces():
    return grassmannians() + lagrangians() + spinors()


def all_spaces():
    return partition_spaces() + quadrics() + [("E6", 6, 6), ("E7", 7, 7)]


class _Check:
    def __init__(self, name):
        self.name, self.cases, self.failure = name, 0, None

    def __call__(self, ok: bool, what) -> bool:
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = what() if callable(what) else str(what)
        return ok

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.failure is None, self.cases, self.failure)


def _guard(check: _Check, fn):
    try:
        fn()
    except SchurFlexError as exc:
        check(False, f"{type(exc).__name__}: {exc}")
    return check.result()


# ---- dictionaries


def check_dictionaries(spaces=None) -> list:
    spaces = spaces or partition_spaces()
    rt, agree, dim = _Check("partition <-> (a,J) round trip"), _Check("partition_to_aj = compute_aJ"), _Check("partition dimension = |Delta(w)|")

    def run():
        for args in spaces:
            poset = classified(*args)
            space = poset.space
            for cls in poset.classes:
                p = class_to_partition(space, cls)
                dim(partition_dimension(p) == cls.dim, lambda: f"{space.name} {p}")
                rt(partition_to_class(space, p.parts) == cls, lambda: f"{space.name} {p}")
                if space.is_extremal(cls):
                    continue
                aj = compute_aJ(space, cls)
                mine = partition_to_aj(p)
                agree(mine == aj, lambda: f"{space.name} {p}: {mine} vs {aj}")
                back = aj_to_partition(p.family, p.params, mine)
                rt(back == p, lambda: f"{space.name} {mine} -> {back}, expected {p}")

    _guard(rt, run)
    return [rt.result(), agree.result(), dim.result()]


# ---- criteria


def check_criteria(spaces=None, quadric_spaces=None) -> list:
    spaces = spaces or partition_spaces()
    quadric_spaces = quadric_spaces or quadrics()
    part, quad = _Check("root-level rigidity = partition criteria"), _Check("root-level rigidity = quadric criterion")

    def run():
        for args in spaces:
            poset = classified(*args)
            for cls, rep in zip(poset.classes, poset.reports):
                p = class_to_partition(poset.space, cls)
                part(rigid_by_partition(p) == rep.rigid, lambda: f"{poset.space.name} {p}: roots say rigid={rep.rigid}")
        for args in quadric_spaces:
            poset = classified(*args)
            parity, m = quadric_parameters(poset.space)
            for cls, rep in zip(poset.classes, poset.reports):
                d, branch = quadric_selector(poset.space, cls)
                quad(quadric_rigid(parity, m, d, branch) == rep.rigid, lambda: f"{poset.space.name} d={d} {branch}")

    _guard(part, run)
    return [part.result(), quad.result()]


# ---- duality


def check_duality(spaces=None) -> list:
    spaces = spaces or all_spaces()
    inv, rig, betti = _Check("Poincare dual is a dimension-complementing involution"), _Check("rigidity is invariant under duality"), _Check("Betti numbers are palindromic")

    def run():
        for args in spaces:
            poset = classified(*args)
            space = poset.space
            b = poset.betti()
            betti(b == b[::-1], lambda: f"{space.name} {b}")
            for cls, rep in zip(poset.classes, poset.reports):
                dual = poincare_dual(space, cls)
                inv(
                    dual.dim == space.dim - cls.dim and poincare_dual(space, dual) == cls,
                    lambda: f"{space.name} {cls}",
                )
                rig(poset.report(dual).rigid == rep.rigid, lambda: f"{space.name} {cls}")

    _guard(inv, run)
    return [inv.result(), rig.result(), betti.result()]


# ---- structure


def check_structure(spaces=None) -> list:
    spaces = spaces or all_spaces()
    names = {
        "divisor": "divisors of w are Delta(w) minus gamma, gamma in Pi(g_{1,a}); equal r_gamma w",
        "recon": "Delta(w) = {alpha in Delta(g1) : alpha(Z_w) <= a}",
        "stab": "ideal is closed downward under simple roots",
        "lowest": "lowest weights of g_{0,1} are the simple roots alpha_j, j in J",
        "a0": "a = 0 implies no H2 witnesses",
        "cert": "every flexible class has a passing certificate",
        "words": "word_from_inversions round-trips",
        "lgspin": "LG(n,2n) <-> S_(n+1) is an order and rigidity preserving bijection",
    }
    c = {k: _Check(v) for k, v in names.items()}

    def per_space(poset):
        space, sys = poset.space, poset.space.sys
        for k, (cls, rep) in enumerate(zip(poset.classes, poset.reports)):
            word = word_from_inversions(sys, cls.roots)
            c["words"](inversion_set(sys, word) == cls.set, lambda: f"{space.name} {cls}")
            for j in range(1, space.rank + 1):
                if j == space.node:
                    continue
                for mu in cls.roots:
                    down = tuple(x - (t == j - 1) for t, x in enumerate(mu))
                    c["stab"](down not in space.g1_set or down in cls.set, lambda: f"{space.name} {cls} j={j}")
            if space.is_extremal(cls):
                continue
            aj = rep.aj
            rebuilt = frozenset(al for al in space.g1 if sum(al[j - 1] for j in aj.J) <= aj.a)
            c["recon"](rebuilt == cls.set, lambda: f"{space.name} {cls}")
            low = extremal_weights(space, aj.J, 0, 1, LOWEST)
            c["lowest"](low == sorted(sys.simple_root(j) for j in aj.J), lambda: f"{space.name} {aj}: {low}")
            top = set(extremal_weights(space, aj.J, 1, aj.a, HIGHEST))
            below = {poset.classes[lo] for lo in poset.down[k]}
            removable = {g for g in cls.roots if cls.set - {g} in {b.set for b in below}}
            ok = removable == top and len(below) == len(top)
            for g in top:
                via = inversion_set(sys, reflection_word(sys, g) + word)
                ok = ok and via == cls.set - {g}
            c["divisor"](ok, lambda: f"{space.name} {cls}")
            if aj.a == 0:
                c["a0"](not rep.h2, lambda: f"{space.name} {cls}")
            if not rep.rigid:
                cert = flex_certificate(space, cls)
                c["cert"](cert.ok, lambda: f"{space.name} {cls}")

    def run():
        for args in spaces:
            per_space(classified(*args))
        for n in range(2, 7):
            lg, sp = classified("C", n, n), classified("D", n + 1, n + 1)
            image = {}
            for k, cls in enumerate(sp.classes):
                q = lg_spinor_map(class_to_partition(sp.space, cls))
                target = lg.index[partition_to_class(lg.space, q.parts)]
                image[k] = target
                c["lgspin"](
                    lg.reports[target].rigid == sp.reports[k].rigid and lg.classes[target].dim == cls.dim,
                    lambda: f"S_{n + 1} {cls}",
                )
            mapped = sorted((image[a], image[b]) for a, b in sp.covers)
            c["lgspin"](
                len(set(image.values())) == len(lg.classes) and mapped == sorted(lg.covers),
                lambda: f"LG({n},{2 * n}) vs S_{n + 1}: poset mismatch",
            )

    _guard(c["divisor"], run)
    return [x.result() for x in c.values()]


# ---- golden files


def load_golden(name: str) -> dict:
    return json.loads(resources.files("schurflex").joinpath("data", name).read_text(encoding="utf-8"))


def check_table(golden: str, args) -> list:
    data = load_golden(golden)
    rows = {tuple(r["partition"]): r for r in data["rows"]}
    poset = classified(*args)
    space = poset.space
    chk = _Check(f"{data['space']} table")
    seen = set()
    for cls, rep in zip(poset.classes, poset.reports):
        p = class_to_partition(space, cls)
        seen.add(p.parts)
        row = rows.get(p.parts)
        if not chk(row is not None, f"{p} missing from table"):
            continue
        aj = None if rep.aj is None else str(rep.aj)
        chk(aj == row["aj"], lambda: f"{p}: a:J {aj} vs {row['aj']}")
        chk(rep.rigid == row["rigid"], lambda: f"{p}: rigid {rep.rigid} vs {row['rigid']}")
        if "r" in row and rep.aj is not None:
            r1, r2 = spinor_r(p), aj_spinor_r(space, rep.aj)
            chk(r1 == r2 == row["r"], lambda: f"{p}: r {r1}/{r2} vs {row['r']}")
    chk(len(poset) == len(rows) and seen == set(rows), f"{len(poset)} classes vs {len(rows)} rows")
    rigid_rows = sum(r["rigid"] for r in rows.values())
    chk(len(poset.rigid_classes()) == rigid_rows, f"rigid count {len(poset.rigid_classes())} vs {rigid_rows}")
    return [chk.result()]


def figure_graph(data) -> nx.DiGraph:
    g = nx.DiGraph()
    for node in data["nodes"]:
        g.add_node(node["id"], dim=node["dim"], degree=node["degree"], rigid=node["rigid"])
    g.add_edges_from(tuple(e) for e in data["covers"])
    return g


def poset_graph(poset) -> nx.DiGraph:
    g = nx.DiGraph()
    for k, cls in enumerate(poset.classes):
        g.add_node(k, dim=cls.dim, degree=poset.degrees[k], rigid=poset.reports[k].rigid)
    g.add_edges_from(poset.covers)
    return g


def check_figure(golden: str, args) -> list:
    data = load_golden(golden)
    poset = classified(*args)
    chk = _Check(f"{data['space']} figure")
    fig, ours = figure_graph(data), poset_graph(poset)
    match = lambda a, b: a == b
    gm = nx.algorithms.isomorphism.DiGraphMatcher(ours, fig, node_match=match)
    chk(gm.is_isomorphic(), "computed Hasse poset is not isomorphic to the figure (dim, degree, rigid)")
    errata = {e["id"]: e for e in data["errata"]}
    labels = _Check(f"{data['space']} printed degree labels")
    for node in data["nodes"]:
        e = errata.get(node["id"])
        if e is None:
            labels(node["label"] == node["degree"], lambda: f"node {node['id']}")
        else:
            labels(node["label"] == e["printed"] and node["degree"] == e["chains"], lambda: f"node {node['id']}")
    return [chk.result(), labels.result()]


def check_figures() -> list:
    out = []
    out += check_table("lg_5_10_table.json", ("C", 5, 5))
    out += check_table("spinor_6_table.json", ("D", 6, 6))
    out += check_figure("e6_p6_figure.json", ("E6", 6, 6))
    out += check_figure("e7_p7_figure.json", ("E7", 7, 7))
    return out


def run_suite(name: str) -> list:
    table = {
        "dictionaries": check_dictionaries,
        "criteria": check_criteria,
        "duality": check_duality,
        "structure": check_structure,
        "figures": check_figures,
    }
    if name == "all":
        return [r for key in SUITES for r in table[key]()]
    if name not in table:
        raise KeyError(name)
    return table[name]()
