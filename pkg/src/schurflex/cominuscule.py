"""Cominuscule spaces G/P and their Schubert classes as order ideals.

A Schubert class is stored as its inversion set, a lower order ideal of the
poset ``Delta(g_1)`` of positive roots whose coefficient at the cominuscule
node is 1.  ``alpha <= beta`` iff ``beta - alpha`` is a nonnegative
combination of simple roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import ConsistencyError, InvalidInput
from .rootsys import Root, RootSystem, build_root_system, cominuscule_nodes, format_root
from .weyl import closure_violation


@dataclass(frozen=True, order=True)
class SchubertClass:
    """A class ``w`` in ``W^p``, identified by the sorted tuple of roots in ``Delta(w)``."""

    roots: tuple

    @classmethod
    def of(cls, roots: Iterable[Root]) -> "SchubertClass":
        return cls(tuple(sorted(tuple(r) for r in roots)))

    @property
    def dim(self) -> int:
        return len(self.roots)

    @cached_property
    def set(self) -> frozenset:
        return frozenset(self.roots)

    def __contains__(self, root) -> bool:
        return tuple(root) in self.set

    def __len__(self) -> int:
        return len(self.roots)

    def sort_key(self):
        return (len(self.roots), self.roots)

    def __str__(self) -> str:
        return "{" + ", ".join(format_root(r) for r in self.roots) + "}"


@dataclass(frozen=True)
class CominusculeSpace:
    sys: RootSystem
    node: int
    g1: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.g1)

    @cached_property
    def g1_set(self) -> frozenset:
        return frozenset(self.g1)

    @property
    def family(self) -> str:
        return self.sys.family

    @property
    def rank(self) -> int:
        return self.sys.rank

    @cached_property
    def kind(self) -> str:
        f, n, i = self.family, self.rank, self.node
        if f == "A":
            return "grassmannian"
        if f == "B":
            return "odd_quadric"
        if f == "C":
            return "lagrangian"
        if f == "D":
            return "even_quadric" if i == 1 else "spinor"
        return "exceptional"

    @cached_property
    def name(self) -> str:
        f, n, i = self.family, self.rank, self.node
        if f == "A":
            return f"Gr({i},{n + 1})"
        if f == "B":
            return f"Q^{2 * n - 1}"
        if f == "C":
            return f"LG({n},{2 * n})"
        if f == "D":
            return f"Q^{2 * n - 2}" if i == 1 else f"S_{n}"
        return f"{f}/P{i}"

    def leq(self, a: Root, b: Root) -> bool:
        return all(x <= y for x, y in zip(a, b))

    @cached_property
    def lower_covers(self) -> dict:
        """``alpha -> [alpha - alpha_j in g1]``, the covering relations of the g1 poset."""
        out = {}
        for a in self.g1:
            out[a] = [
                b
                for j in range(1, self.rank + 1)
                if j != self.node
                for b in [tuple(c - (k == j - 1) for k, c in enumerate(a))]
                if b in self.g1_set
            ]
        return out

    @cached_property
    def upper_covers(self) -> dict:
        out = {a: [] for a in self.g1}
        for a, lows in self.lower_covers.items():
            for b in lows:
                out[b].append(a)
        return out

    def is_ideal(self, roots: Iterable[Root]) -> bool:
        s = set(roots)
        if not s <= self.g1_set:
            return False
        # the order is generated by its covers, so checking covers suffices
        return all(b in s for a in s for b in self.lower_covers[a])

    def complement_closed(self, roots: Iterable[Root]) -> bool:
        """The closure criterion: ``Delta^+ minus roots`` is closed under root addition."""
        s = set(roots)
        return closure_violation(self.sys, set(self.sys.positive_roots) - s) is None

    def schubert_class(self, roots: Iterable[Root]) -> SchubertClass:
        cls = SchubertClass.of(roots)
        if not self.is_ideal(cls.roots):
            raise InvalidInput(f"{cls} is not a lower order ideal of Delta(g1) in {self.name}")
        return cls

    @property
    def bottom(self) -> SchubertClass:
        return SchubertClass(())

    @property
    def top(self) -> SchubertClass:
        return SchubertClass.of(self.g1)

    def is_extremal(self, cls: SchubertClass) -> bool:
        return cls.dim in (0, self.dim)


def build_space(family: str, rank: Optional[int] = None, node: Optional[int] = None) -> CominusculeSpace:
    sys = build_root_system(family, rank)
    if node is None:
        node = default_node(sys.family, sys.rank)
    nodes = cominuscule_nodes(sys)
    if node not in nodes:
        raise InvalidInput(f"node {node} is not cominuscule for {sys.label()}; choose from {nodes}")
    coeffs = {a[node - 1] for a in sys.positive_roots}
    if not coeffs <= {0, 1}:
        raise ConsistencyError(f"node {node} of {sys.label()} grades with coefficients {coeffs}")
    g1 = tuple(a for a in sys.positive_roots if a[node - 1] == 1)
    return CominusculeSpace(sys=sys, node=node, g1=g1)


def default_node(family: str, rank: int) -> int:
    defaults = {"B": 1, "C": rank, "E6": 6, "E7": 7}
    if family not in defaults:
        raise InvalidInput(f"type {family} needs an explicit cominuscule node")
    return defaults[family]


@dataclass(frozen=True)
class HassePoset:
    """All Schubert classes of a space with divisor covers and degrees.

    ``covers`` holds index pairs ``(lower, upper)`` where the upper ideal is the
    lower one plus one root.  ``classes`` is sorted by dimension, then
    lexicographically by root list.  ``reports`` is empty until the poset has
    been run through :func:`schurflex.rigidity.classify`.
    """

    space: CominusculeSpace
    classes: tuple
    covers: tuple
    degrees: tuple
    reports: tuple = ()

    @property
    def classified(self) -> bool:
        return len(self.reports) == len(self.classes)

    def report(self, cls: SchubertClass):
        if not self.classified:
            raise InvalidInput("poset has not been classified")
        return self.reports[self.index[cls]]

    def rigid_classes(self) -> list:
        return [c for c, r in zip(self.classes, self.reports) if r.rigid]

    @cached_property
    def index(self) -> dict:
        return {c: k for k, c in enumerate(self.classes)}

    @cached_property
    def down(self) -> dict:
        out = {k: [] for k in range(len(self.classes))}
        for lo, hi in self.covers:
            out[hi].append(lo)
        return out

    @cached_property
    def up(self) -> dict:
        out = {k: [] for k in range(len(self.classes))}
        for lo, hi in self.covers:
            out[lo].append(hi)
        return out

    @property
    def bottom(self) -> SchubertClass:
        return self.classes[0]

    @property
    def top(self) -> SchubertClass:
        return self.classes[-1]

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def betti(self) -> list:
        out = [0] * (self.space.dim + 1)
        for c in self.classes:
            out[c.dim] += 1
        return out


def _addable(space: CominusculeSpace, ideal: frozenset) -> list:
    return [
        a
        for a in space.g1
        if a not in ideal and all(b in ideal for b in space.lower_covers[a])
    ]


def enumerate_classes(space: CominusculeSpace) -> HassePoset:
    layer = {frozenset()}
    found = [frozenset()]
    while layer:
        nxt = set()
        for ideal in layer:
            for a in _addable(space, ideal):
                nxt.add(ideal | {a})
        found.extend(nxt)
        layer = nxt
    classes = sorted((SchubertClass.of(s) for s in found), key=SchubertClass.sort_key)
    for c in classes:
        if not space.is_ideal(c.roots) or not space.complement_closed(c.roots):
            raise ConsistencyError(f"enumerated set {c} fails the ideal/closure check")
    index = {c: k for k, c in enumerate(classes)}
    covers = []
    for k, c in enumerate(classes):
        for a in c.roots:
            smaller = SchubertClass.of(r for r in c.roots if r != a)
            if smaller in index:
                covers.append((index[smaller], k))
    covers.sort()
    degrees = [0] * len(classes)
    degrees[0] = 1
    down = {k: [] for k in range(len(classes))}
    for lo, hi in covers:
        down[hi].append(lo)
    for k in range(1, len(classes)):
        degrees[k] = sum(degrees[lo] for lo in down[k])
    return HassePoset(space=space, classes=tuple(classes), covers=tuple(covers), degrees=tuple(degrees))


def degree(poset: HassePoset, cls: SchubertClass) -> int:
    """Number of saturated chains from the point class up to ``cls``."""
    return poset.degrees[poset.index[cls]]
